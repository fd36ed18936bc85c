/** Real server payloads, recorded once from the stepping API. */

import type { SessionPayload } from '../src/api.js';

export const masterWorkers: SessionPayload = {
    "id": "fixture",
    "state": {
        "events": [
            {
                "id": 0,
                "label": {
                    "kind": "send",
                    "from": "m",
                    "to": "w1",
                    "msg": "t"
                }
            },
            {
                "id": 1,
                "label": {
                    "kind": "recv",
                    "from": "m",
                    "to": "w1",
                    "msg": "t"
                }
            },
            {
                "id": 2,
                "label": {
                    "kind": "send",
                    "from": "w1",
                    "to": "m",
                    "msg": "d"
                }
            },
            {
                "id": 3,
                "label": {
                    "kind": "recv",
                    "from": "w1",
                    "to": "m",
                    "msg": "d"
                }
            },
            {
                "id": 4,
                "label": {
                    "kind": "send",
                    "from": "m",
                    "to": "w2",
                    "msg": "t"
                }
            },
            {
                "id": 5,
                "label": {
                    "kind": "recv",
                    "from": "m",
                    "to": "w2",
                    "msg": "t"
                }
            },
            {
                "id": 6,
                "label": {
                    "kind": "send",
                    "from": "w2",
                    "to": "m",
                    "msg": "d"
                }
            },
            {
                "id": 7,
                "label": {
                    "kind": "recv",
                    "from": "w2",
                    "to": "m",
                    "msg": "d"
                }
            }
        ],
        "deps": [
            [
                0,
                1
            ],
            [
                0,
                3
            ],
            [
                1,
                2
            ],
            [
                2,
                3
            ],
            [
                4,
                5
            ],
            [
                4,
                7
            ],
            [
                5,
                6
            ],
            [
                6,
                7
            ]
        ],
        "branching": {
            "type": "node",
            "children": [
                {
                    "type": "event",
                    "id": 0
                },
                {
                    "type": "event",
                    "id": 1
                },
                {
                    "type": "event",
                    "id": 2
                },
                {
                    "type": "event",
                    "id": 3
                },
                {
                    "type": "event",
                    "id": 4
                },
                {
                    "type": "event",
                    "id": 5
                },
                {
                    "type": "event",
                    "id": 6
                },
                {
                    "type": "event",
                    "id": 7
                }
            ]
        }
    },
    "chor": "m->w1:t ; w1->m:d || m->w2:t ; w2->m:d",
    "enabled": [
        {
            "event": 0,
            "label": {
                "kind": "send",
                "from": "m",
                "to": "w1",
                "msg": "t"
            }
        },
        {
            "event": 4,
            "label": {
                "kind": "send",
                "from": "m",
                "to": "w2",
                "msg": "t"
            }
        }
    ],
    "terminated": false
};

export const distributedVoting: SessionPayload = {
    "id": "fixture",
    "state": {
        "events": [
            {
                "id": 0,
                "label": {
                    "kind": "send",
                    "from": "a",
                    "to": "b",
                    "msg": "y"
                }
            },
            {
                "id": 1,
                "label": {
                    "kind": "recv",
                    "from": "a",
                    "to": "b",
                    "msg": "y"
                }
            },
            {
                "id": 2,
                "label": {
                    "kind": "send",
                    "from": "a",
                    "to": "c",
                    "msg": "y"
                }
            },
            {
                "id": 3,
                "label": {
                    "kind": "recv",
                    "from": "a",
                    "to": "c",
                    "msg": "y"
                }
            },
            {
                "id": 4,
                "label": {
                    "kind": "send",
                    "from": "a",
                    "to": "b",
                    "msg": "n"
                }
            },
            {
                "id": 5,
                "label": {
                    "kind": "recv",
                    "from": "a",
                    "to": "b",
                    "msg": "n"
                }
            },
            {
                "id": 6,
                "label": {
                    "kind": "send",
                    "from": "a",
                    "to": "c",
                    "msg": "n"
                }
            },
            {
                "id": 7,
                "label": {
                    "kind": "recv",
                    "from": "a",
                    "to": "c",
                    "msg": "n"
                }
            },
            {
                "id": 8,
                "label": {
                    "kind": "send",
                    "from": "b",
                    "to": "a",
                    "msg": "y"
                }
            },
            {
                "id": 9,
                "label": {
                    "kind": "recv",
                    "from": "b",
                    "to": "a",
                    "msg": "y"
                }
            },
            {
                "id": 10,
                "label": {
                    "kind": "send",
                    "from": "b",
                    "to": "c",
                    "msg": "y"
                }
            },
            {
                "id": 11,
                "label": {
                    "kind": "recv",
                    "from": "b",
                    "to": "c",
                    "msg": "y"
                }
            },
            {
                "id": 12,
                "label": {
                    "kind": "send",
                    "from": "b",
                    "to": "a",
                    "msg": "n"
                }
            },
            {
                "id": 13,
                "label": {
                    "kind": "recv",
                    "from": "b",
                    "to": "a",
                    "msg": "n"
                }
            },
            {
                "id": 14,
                "label": {
                    "kind": "send",
                    "from": "b",
                    "to": "c",
                    "msg": "n"
                }
            },
            {
                "id": 15,
                "label": {
                    "kind": "recv",
                    "from": "b",
                    "to": "c",
                    "msg": "n"
                }
            },
            {
                "id": 16,
                "label": {
                    "kind": "send",
                    "from": "c",
                    "to": "a",
                    "msg": "y"
                }
            },
            {
                "id": 17,
                "label": {
                    "kind": "recv",
                    "from": "c",
                    "to": "a",
                    "msg": "y"
                }
            },
            {
                "id": 18,
                "label": {
                    "kind": "send",
                    "from": "c",
                    "to": "b",
                    "msg": "y"
                }
            },
            {
                "id": 19,
                "label": {
                    "kind": "recv",
                    "from": "c",
                    "to": "b",
                    "msg": "y"
                }
            },
            {
                "id": 20,
                "label": {
                    "kind": "send",
                    "from": "c",
                    "to": "a",
                    "msg": "n"
                }
            },
            {
                "id": 21,
                "label": {
                    "kind": "recv",
                    "from": "c",
                    "to": "a",
                    "msg": "n"
                }
            },
            {
                "id": 22,
                "label": {
                    "kind": "send",
                    "from": "c",
                    "to": "b",
                    "msg": "n"
                }
            },
            {
                "id": 23,
                "label": {
                    "kind": "recv",
                    "from": "c",
                    "to": "b",
                    "msg": "n"
                }
            }
        ],
        "deps": [
            [
                0,
                1
            ],
            [
                2,
                3
            ],
            [
                4,
                5
            ],
            [
                6,
                7
            ],
            [
                8,
                9
            ],
            [
                10,
                11
            ],
            [
                12,
                13
            ],
            [
                14,
                15
            ],
            [
                16,
                17
            ],
            [
                18,
                19
            ],
            [
                20,
                21
            ],
            [
                22,
                23
            ]
        ],
        "branching": {
            "type": "node",
            "children": [
                {
                    "type": "choice",
                    "branches": [
                        {
                            "type": "node",
                            "children": [
                                {
                                    "type": "event",
                                    "id": 0
                                },
                                {
                                    "type": "event",
                                    "id": 1
                                },
                                {
                                    "type": "event",
                                    "id": 2
                                },
                                {
                                    "type": "event",
                                    "id": 3
                                }
                            ]
                        },
                        {
                            "type": "node",
                            "children": [
                                {
                                    "type": "event",
                                    "id": 4
                                },
                                {
                                    "type": "event",
                                    "id": 5
                                },
                                {
                                    "type": "event",
                                    "id": 6
                                },
                                {
                                    "type": "event",
                                    "id": 7
                                }
                            ]
                        }
                    ]
                },
                {
                    "type": "choice",
                    "branches": [
                        {
                            "type": "node",
                            "children": [
                                {
                                    "type": "event",
                                    "id": 8
                                },
                                {
                                    "type": "event",
                                    "id": 9
                                },
                                {
                                    "type": "event",
                                    "id": 10
                                },
                                {
                                    "type": "event",
                                    "id": 11
                                }
                            ]
                        },
                        {
                            "type": "node",
                            "children": [
                                {
                                    "type": "event",
                                    "id": 12
                                },
                                {
                                    "type": "event",
                                    "id": 13
                                },
                                {
                                    "type": "event",
                                    "id": 14
                                },
                                {
                                    "type": "event",
                                    "id": 15
                                }
                            ]
                        }
                    ]
                },
                {
                    "type": "choice",
                    "branches": [
                        {
                            "type": "node",
                            "children": [
                                {
                                    "type": "event",
                                    "id": 16
                                },
                                {
                                    "type": "event",
                                    "id": 17
                                },
                                {
                                    "type": "event",
                                    "id": 18
                                },
                                {
                                    "type": "event",
                                    "id": 19
                                }
                            ]
                        },
                        {
                            "type": "node",
                            "children": [
                                {
                                    "type": "event",
                                    "id": 20
                                },
                                {
                                    "type": "event",
                                    "id": 21
                                },
                                {
                                    "type": "event",
                                    "id": 22
                                },
                                {
                                    "type": "event",
                                    "id": 23
                                }
                            ]
                        }
                    ]
                }
            ]
        }
    },
    "chor": "(a->b:y || a->c:y + a->b:n || a->c:n) || (b->a:y || b->c:y + b->a:n || b->c:n) || (c->a:y || c->b:y + c->a:n || c->b:n)",
    "enabled": [
        {
            "event": 0,
            "label": {
                "kind": "send",
                "from": "a",
                "to": "b",
                "msg": "y"
            }
        },
        {
            "event": 2,
            "label": {
                "kind": "send",
                "from": "a",
                "to": "c",
                "msg": "y"
            }
        },
        {
            "event": 4,
            "label": {
                "kind": "send",
                "from": "a",
                "to": "b",
                "msg": "n"
            }
        },
        {
            "event": 6,
            "label": {
                "kind": "send",
                "from": "a",
                "to": "c",
                "msg": "n"
            }
        },
        {
            "event": 8,
            "label": {
                "kind": "send",
                "from": "b",
                "to": "a",
                "msg": "y"
            }
        },
        {
            "event": 10,
            "label": {
                "kind": "send",
                "from": "b",
                "to": "c",
                "msg": "y"
            }
        },
        {
            "event": 12,
            "label": {
                "kind": "send",
                "from": "b",
                "to": "a",
                "msg": "n"
            }
        },
        {
            "event": 14,
            "label": {
                "kind": "send",
                "from": "b",
                "to": "c",
                "msg": "n"
            }
        },
        {
            "event": 16,
            "label": {
                "kind": "send",
                "from": "c",
                "to": "a",
                "msg": "y"
            }
        },
        {
            "event": 18,
            "label": {
                "kind": "send",
                "from": "c",
                "to": "b",
                "msg": "y"
            }
        },
        {
            "event": 20,
            "label": {
                "kind": "send",
                "from": "c",
                "to": "a",
                "msg": "n"
            }
        },
        {
            "event": 22,
            "label": {
                "kind": "send",
                "from": "c",
                "to": "b",
                "msg": "n"
            }
        }
    ],
    "terminated": false
};

export const relayChoice: SessionPayload = {
    "id": "fixture",
    "state": {
        "events": [
            {
                "id": 0,
                "label": {
                    "kind": "send",
                    "from": "a",
                    "to": "b",
                    "msg": "x"
                }
            },
            {
                "id": 1,
                "label": {
                    "kind": "recv",
                    "from": "a",
                    "to": "b",
                    "msg": "x"
                }
            },
            {
                "id": 2,
                "label": {
                    "kind": "send",
                    "from": "b",
                    "to": "c",
                    "msg": "x"
                }
            },
            {
                "id": 3,
                "label": {
                    "kind": "recv",
                    "from": "b",
                    "to": "c",
                    "msg": "x"
                }
            },
            {
                "id": 4,
                "label": {
                    "kind": "send",
                    "from": "b",
                    "to": "d",
                    "msg": "x"
                }
            },
            {
                "id": 5,
                "label": {
                    "kind": "recv",
                    "from": "b",
                    "to": "d",
                    "msg": "x"
                }
            },
            {
                "id": 6,
                "label": {
                    "kind": "send",
                    "from": "c",
                    "to": "d",
                    "msg": "x"
                }
            },
            {
                "id": 7,
                "label": {
                    "kind": "recv",
                    "from": "c",
                    "to": "d",
                    "msg": "x"
                }
            }
        ],
        "deps": [
            [
                0,
                1
            ],
            [
                1,
                2
            ],
            [
                1,
                4
            ],
            [
                2,
                3
            ],
            [
                3,
                6
            ],
            [
                4,
                5
            ],
            [
                5,
                7
            ],
            [
                6,
                7
            ]
        ],
        "branching": {
            "type": "node",
            "children": [
                {
                    "type": "event",
                    "id": 0
                },
                {
                    "type": "event",
                    "id": 1
                },
                {
                    "type": "choice",
                    "branches": [
                        {
                            "type": "node",
                            "children": [
                                {
                                    "type": "event",
                                    "id": 2
                                },
                                {
                                    "type": "event",
                                    "id": 3
                                }
                            ]
                        },
                        {
                            "type": "node",
                            "children": [
                                {
                                    "type": "event",
                                    "id": 4
                                },
                                {
                                    "type": "event",
                                    "id": 5
                                }
                            ]
                        }
                    ]
                },
                {
                    "type": "event",
                    "id": 6
                },
                {
                    "type": "event",
                    "id": 7
                }
            ]
        }
    },
    "chor": "a->b:x ; (b->c:x + b->d:x) ; c->d:x",
    "enabled": [
        {
            "event": 0,
            "label": {
                "kind": "send",
                "from": "a",
                "to": "b",
                "msg": "x"
            }
        },
        {
            "event": 6,
            "label": {
                "kind": "send",
                "from": "c",
                "to": "d",
                "msg": "x"
            }
        }
    ],
    "terminated": false
};

export const relayAfterCd: SessionPayload = {
    "id": "fixture",
    "state": {
        "events": [
            {
                "id": 0,
                "label": {
                    "kind": "send",
                    "from": "a",
                    "to": "b",
                    "msg": "x"
                }
            },
            {
                "id": 1,
                "label": {
                    "kind": "recv",
                    "from": "a",
                    "to": "b",
                    "msg": "x"
                }
            },
            {
                "id": 4,
                "label": {
                    "kind": "send",
                    "from": "b",
                    "to": "d",
                    "msg": "x"
                }
            },
            {
                "id": 5,
                "label": {
                    "kind": "recv",
                    "from": "b",
                    "to": "d",
                    "msg": "x"
                }
            },
            {
                "id": 7,
                "label": {
                    "kind": "recv",
                    "from": "c",
                    "to": "d",
                    "msg": "x"
                }
            }
        ],
        "deps": [
            [
                0,
                1
            ],
            [
                1,
                4
            ],
            [
                4,
                5
            ],
            [
                5,
                7
            ]
        ],
        "branching": {
            "type": "node",
            "children": [
                {
                    "type": "event",
                    "id": 0
                },
                {
                    "type": "event",
                    "id": 1
                },
                {
                    "type": "event",
                    "id": 4
                },
                {
                    "type": "event",
                    "id": 5
                },
                {
                    "type": "event",
                    "id": 7
                }
            ]
        }
    },
    "chor": "a->b:x ; b->d:x ; c d?x",
    "enabled": [
        {
            "event": 0,
            "label": {
                "kind": "send",
                "from": "a",
                "to": "b",
                "msg": "x"
            }
        }
    ],
    "terminated": false
};
