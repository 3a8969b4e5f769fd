/** Recorded service responses for the alternative-argument and mixed fixtures. */

export const recorded = {
  "alt": {
    "model": {
      "revision": 1,
      "model": {
        "version": 1,
        "nodes": [
          {
            "id": "A",
            "kind": "goal",
            "statement": "Component is acceptably safe"
          },
          {
            "id": "B",
            "kind": "solution",
            "statement": "Integration test campaign passed"
          },
          {
            "id": "C",
            "kind": "solution",
            "statement": "Static analysis found no defects"
          }
        ],
        "edges": [
          {
            "kind": "supported_by",
            "parent": "A",
            "child": "B"
          },
          {
            "kind": "supported_by",
            "parent": "A",
            "child": "C"
          }
        ],
        "arguments": [
          {
            "goal": "A",
            "type": "alternative",
            "children": [
              {
                "ref": "B",
                "weight": 0.9
              },
              {
                "ref": "C",
                "weight": 0.7
              }
            ]
          }
        ],
        "confidence": {
          "B": 0.8,
          "C": 0.7
        }
      }
    },
    "network": {
      "revision": 1,
      "network": {
        "root": "A",
        "nodes": [
          {
            "id": "B",
            "origin": "leaf",
            "source": "B",
            "parents": [],
            "combinator": null
          },
          {
            "id": "C",
            "origin": "leaf",
            "source": "C",
            "parents": [],
            "combinator": null
          },
          {
            "id": "A",
            "origin": "derived",
            "source": "A",
            "parents": [
              "B",
              "C"
            ],
            "combinator": {
              "type": "noisy_or",
              "weights": [
                0.9,
                0.7
              ]
            }
          }
        ]
      }
    },
    "evaluateBaseline": {
      "revision": 1,
      "root_confidence": 0.8572,
      "per_node": {
        "B": 0.8,
        "C": 0.7,
        "A": 0.8572
      }
    },
    "evaluateB1": {
      "revision": 1,
      "root_confidence": 0.949,
      "per_node": {
        "B": 1.0,
        "C": 0.7,
        "A": 0.949
      }
    },
    "tornado": {
      "revision": 1,
      "tornado": {
        "target": "A",
        "baseline": 0.8572,
        "entries": [
          {
            "variable": {
              "kind": "leaf_confidence",
              "key": "B",
              "label": "g(B)"
            },
            "at_min": 0.49,
            "at_max": 0.949,
            "width": 0.459,
            "increases_at": "max"
          },
          {
            "variable": {
              "kind": "weight",
              "key": "w:A:0",
              "label": "w(A<-B)"
            },
            "at_min": 0.49,
            "at_max": 0.898,
            "width": 0.408,
            "increases_at": "max"
          },
          {
            "variable": {
              "kind": "leaf_confidence",
              "key": "C",
              "label": "g(C)"
            },
            "at_min": 0.72,
            "at_max": 0.916,
            "width": 0.196,
            "increases_at": "max"
          },
          {
            "variable": {
              "kind": "weight",
              "key": "w:A:1",
              "label": "w(A<-C)"
            },
            "at_min": 0.72,
            "at_max": 0.916,
            "width": 0.196,
            "increases_at": "max"
          }
        ]
      }
    }
  },
  "nested": {
    "model": {
      "revision": 1,
      "model": {
        "version": 1,
        "nodes": [
          {
            "id": "G",
            "kind": "goal",
            "statement": "Monitoring subsystem meets its safety requirement"
          },
          {
            "id": "H",
            "kind": "goal",
            "statement": "Watchdog coverage is complete"
          },
          {
            "id": "X",
            "kind": "solution",
            "statement": "Hardware-in-the-loop test report"
          },
          {
            "id": "Y",
            "kind": "solution",
            "statement": "Field return statistics"
          },
          {
            "id": "SnH",
            "kind": "solution",
            "statement": "Coverage analysis of the watchdog matrix"
          },
          {
            "id": "CX",
            "kind": "context",
            "statement": "Deployment profile restricted to supervised operation"
          }
        ],
        "edges": [
          {
            "kind": "supported_by",
            "parent": "G",
            "child": "H"
          },
          {
            "kind": "supported_by",
            "parent": "G",
            "child": "X"
          },
          {
            "kind": "supported_by",
            "parent": "G",
            "child": "Y"
          },
          {
            "kind": "supported_by",
            "parent": "H",
            "child": "SnH"
          },
          {
            "kind": "in_context_of",
            "parent": "G",
            "child": "CX"
          }
        ],
        "arguments": [
          {
            "goal": "G",
            "type": "complementary",
            "children": [
              {
                "ref": "H",
                "weight": 0.9
              },
              {
                "group": {
                  "type": "alternative",
                  "children": [
                    {
                      "ref": "X",
                      "weight": 0.8
                    },
                    {
                      "ref": "Y",
                      "weight": 0.6
                    }
                  ]
                },
                "weight": 0.7
              }
            ],
            "leak": 0.5
          }
        ],
        "confidence": {
          "CX": 0.95,
          "SnH": 0.9,
          "X": 0.5,
          "Y": 0.6
        }
      }
    },
    "network": {
      "revision": 1,
      "network": {
        "root": "G",
        "nodes": [
          {
            "id": "CX",
            "origin": "leaf",
            "source": "CX",
            "parents": [],
            "combinator": null
          },
          {
            "id": "SnH",
            "origin": "leaf",
            "source": "SnH",
            "parents": [],
            "combinator": null
          },
          {
            "id": "H",
            "origin": "derived",
            "source": "H",
            "parents": [
              "SnH"
            ],
            "combinator": {
              "type": "simple",
              "weight": 1.0
            }
          },
          {
            "id": "X",
            "origin": "leaf",
            "source": "X",
            "parents": [],
            "combinator": null
          },
          {
            "id": "Y",
            "origin": "leaf",
            "source": "Y",
            "parents": [],
            "combinator": null
          },
          {
            "id": "I_X_Y",
            "origin": "intermediate",
            "parents": [
              "X",
              "Y"
            ],
            "combinator": {
              "type": "noisy_or",
              "weights": [
                0.8,
                0.6
              ]
            }
          },
          {
            "id": "G",
            "origin": "derived",
            "source": "G",
            "parents": [
              "H",
              "I_X_Y",
              "CX"
            ],
            "combinator": {
              "type": "noisy_and",
              "weights": [
                0.9,
                0.7,
                1.0
              ],
              "leak": 0.5,
              "leak_is_default": false
            }
          }
        ]
      }
    }
  },
  "fig9": {
    "model": {
      "revision": 1,
      "model": {
        "version": 1,
        "nodes": [
          {
            "id": "A",
            "kind": "goal",
            "statement": "Control function behaves safely"
          },
          {
            "id": "B",
            "kind": "solution",
            "statement": "Unit test evidence"
          },
          {
            "id": "C",
            "kind": "solution",
            "statement": "Simulation campaign evidence"
          },
          {
            "id": "D",
            "kind": "context",
            "statement": "Operational environment assumptions hold"
          }
        ],
        "edges": [
          {
            "kind": "supported_by",
            "parent": "A",
            "child": "B"
          },
          {
            "kind": "supported_by",
            "parent": "A",
            "child": "C"
          },
          {
            "kind": "in_context_of",
            "parent": "A",
            "child": "D"
          }
        ],
        "arguments": [
          {
            "goal": "A",
            "type": "alternative",
            "children": [
              {
                "ref": "B",
                "weight": 0.9
              },
              {
                "ref": "C",
                "weight": 0.7
              }
            ]
          }
        ],
        "confidence": {
          "B": 0.8,
          "C": 0.7,
          "D": 1.0
        }
      }
    },
    "network": {
      "revision": 1,
      "network": {
        "root": "A",
        "nodes": [
          {
            "id": "B",
            "origin": "leaf",
            "source": "B",
            "parents": [],
            "combinator": null
          },
          {
            "id": "C",
            "origin": "leaf",
            "source": "C",
            "parents": [],
            "combinator": null
          },
          {
            "id": "D",
            "origin": "leaf",
            "source": "D",
            "parents": [],
            "combinator": null
          },
          {
            "id": "I_B_C",
            "origin": "intermediate",
            "parents": [
              "B",
              "C"
            ],
            "combinator": {
              "type": "noisy_or",
              "weights": [
                0.9,
                0.7
              ]
            }
          },
          {
            "id": "A",
            "origin": "derived",
            "source": "A",
            "parents": [
              "I_B_C",
              "D"
            ],
            "combinator": {
              "type": "noisy_and",
              "weights": [
                1.0,
                1.0
              ],
              "leak": 1.0,
              "leak_is_default": true
            }
          }
        ]
      }
    }
  }
} as const;
