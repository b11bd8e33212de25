"""Frozen reference expansions for the series engines.

Keyed by (avoidance class, quadrant spec string); each value maps the
t-degree to the {x-exponent: coefficient} dictionary of the expected
expansion, to the depth the reference records."""

REFERENCE = {
    ('123', '0,1,0,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 1, 1: 1},
        3: {1: 3, 2: 2},
        4: {2: 9, 3: 5},
        5: {3: 28, 4: 14},
        6: {4: 90, 5: 42},
        7: {5: 297, 6: 132},
        8: {6: 1001, 7: 429},
        9: {7: 3432, 8: 1430},
    },
    ('123', '0,1,0,1'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 4, 1: 1},
        4: {0: 4, 1: 8, 2: 2},
        5: {1: 17, 2: 20, 3: 5},
        6: {2: 60, 3: 58, 4: 14},
        7: {3: 205, 4: 182, 5: 42},
        8: {4: 702, 5: 596, 6: 132},
        9: {5: 2429, 6: 2004, 7: 429},
    },
    ('123', '0,2,0,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 3, 1: 2},
        4: {0: 1, 1: 9, 2: 4},
        5: {1: 5, 2: 27, 3: 10},
        6: {2: 20, 3: 84, 4: 28},
        7: {3: 75, 4: 270, 5: 84},
        8: {4: 275, 5: 891, 6: 264},
        9: {5: 1001, 6: 3003, 7: 858},
    },
    ('123', '0,2,0,1'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 12, 1: 2},
        5: {0: 17, 1: 21, 2: 4},
        6: {0: 9, 1: 62, 2: 51, 3: 10},
        7: {1: 47, 2: 208, 3: 146, 4: 28},
        8: {2: 190, 3: 700, 4: 456, 5: 84},
        9: {3: 714, 4: 2393, 5: 1491, 6: 264},
    },
    ('123', '0,2,0,2'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 38, 1: 4},
        6: {0: 70, 1: 54, 2: 8},
        7: {0: 72, 1: 211, 2: 126, 3: 20},
        8: {0: 36, 1: 314, 2: 670, 3: 354, 4: 56},
        9: {1: 199, 2: 1190, 3: 2207, 4: 1098, 5: 168},
        10: {2: 838, 3: 4356, 4: 7492, 5: 3582, 6: 528},
        11: {3: 3241, 4: 15848, 5: 25951, 6: 12030, 7: 1716},
        12: {4: 12180, 5: 57752, 6: 91158, 7: 41202, 8: 5720},
    },
    ('123', '0,3,0,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 9, 1: 5},
        5: {0: 5, 1: 27, 2: 10},
        6: {0: 1, 1: 25, 2: 81, 3: 25},
        7: {1: 7, 2: 100, 3: 252, 4: 70},
        8: {2: 35, 3: 375, 4: 810, 5: 210},
        9: {3: 154, 4: 1375, 5: 2673, 6: 660},
    },
    ('123', '0,4,0,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 28, 1: 14},
        6: {0: 20, 1: 84, 2: 28},
        7: {0: 7, 1: 100, 2: 252, 3: 70},
        8: {0: 1, 1: 49, 2: 400, 3: 784, 4: 196},
        9: {1: 9, 2: 245, 3: 1500, 4: 2520, 5: 588},
        10: {2: 54, 3: 1078, 4: 5500, 5: 8316, 6: 1848},
        11: {3: 273, 4: 4459, 5: 20020, 6: 28028, 7: 6006},
    },
    ('123', '0,5,0,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 90, 1: 42},
        7: {0: 75, 1: 270, 2: 84},
        8: {0: 35, 1: 375, 2: 810, 3: 210},
        9: {0: 9, 1: 245, 2: 1500, 3: 2520, 4: 588},
        10: {0: 1, 1: 81, 2: 1225, 3: 5625, 4: 8100, 5: 1764},
        11: {1: 11, 2: 486, 3: 5390, 4: 20625, 5: 26730, 6: 5544},
        12: {2: 77, 3: 2457, 4: 22295, 5: 75075, 6: 90090, 7: 18018},
        13: {3: 440, 4: 11340, 5: 89180, 6: 273000, 7: 308880, 8: 60060},
    },
    ('132', '0,1,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 1, 1: 1},
        3: {0: 1, 1: 3, 2: 1},
        4: {0: 1, 1: 6, 2: 6, 3: 1},
        5: {0: 1, 1: 10, 2: 20, 3: 10, 4: 1},
        6: {0: 1, 1: 15, 2: 50, 3: 50, 4: 15, 5: 1},
        7: {0: 1, 1: 21, 2: 105, 3: 175, 4: 105, 5: 21, 6: 1},
        8: {0: 1, 1: 28, 2: 196, 3: 490, 4: 490, 5: 196, 6: 28, 7: 1},
        9: {0: 1, 1: 36, 2: 336, 3: 1176, 4: 1764, 5: 1176, 6: 336, 7: 36, 8: 1},
    },
    ('132', '0,1,e,1'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 4, 1: 1},
        4: {0: 7, 1: 6, 2: 1},
        5: {0: 11, 1: 20, 2: 10, 3: 1},
        6: {0: 16, 1: 50, 2: 50, 3: 15, 4: 1},
        7: {0: 22, 1: 105, 2: 175, 3: 105, 4: 21, 5: 1},
        8: {0: 29, 1: 196, 2: 490, 3: 490, 4: 196, 5: 28, 6: 1},
        9: {0: 37, 1: 336, 2: 1176, 3: 1764, 4: 1176, 5: 336, 6: 36, 7: 1},
    },
    ('132', '0,1,e,2'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 12, 1: 2},
        5: {0: 25, 1: 15, 2: 2},
        6: {0: 46, 1: 60, 2: 24, 3: 2},
        7: {0: 77, 1: 175, 2: 140, 3: 35, 4: 2},
        8: {0: 120, 1: 420, 2: 560, 3: 280, 4: 48, 5: 2},
        9: {0: 177, 1: 882, 2: 1764, 3: 1470, 4: 504, 5: 63, 6: 2},
    },
    ('132', '0,1,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 37, 1: 5},
        6: {0: 85, 1: 42, 2: 5},
        7: {0: 172, 1: 186, 2: 66, 3: 5},
        8: {0: 315, 1: 595, 2: 420, 3: 95, 4: 5},
        9: {0: 534, 1: 1554, 2: 1820, 3: 820, 4: 129, 5: 5},
    },
    ('132', '0,2,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 3, 1: 2},
        4: {0: 4, 1: 8, 2: 2},
        5: {0: 5, 1: 20, 2: 15, 3: 2},
        6: {0: 6, 1: 40, 2: 60, 3: 24, 4: 2},
        7: {0: 7, 1: 70, 2: 175, 3: 140, 4: 35, 5: 2},
        8: {0: 8, 1: 112, 2: 420, 3: 560, 4: 280, 5: 48, 6: 2},
        9: {0: 9, 1: 168, 2: 882, 3: 1764, 4: 1470, 5: 504, 6: 63, 7: 2},
    },
    ('132', '0,2,e,2'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 38, 1: 4},
        6: {0: 91, 1: 37, 2: 4},
        7: {0: 192, 1: 176, 2: 57, 3: 4},
        8: {0: 365, 1: 595, 2: 385, 3: 81, 4: 4},
        9: {0: 639, 1: 1624, 2: 1750, 3: 736, 4: 109, 5: 4},
    },
    ('132', '0,2,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 122, 1: 10},
        7: {0: 316, 1: 103, 2: 10},
        8: {0: 724, 1: 540, 2: 156, 3: 10},
        9: {0: 1493, 1: 1995, 2: 1145, 3: 219, 4: 10},
    },
    ('132', '0,3,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 9, 1: 5},
        5: {0: 14, 1: 23, 2: 5},
        6: {0: 20, 1: 65, 2: 42, 3: 5},
        7: {0: 27, 1: 145, 2: 186, 3: 66, 4: 5},
        8: {0: 35, 1: 280, 2: 595, 3: 420, 4: 95, 5: 5},
        9: {0: 44, 1: 490, 2: 1554, 3: 1820, 4: 820, 5: 129, 6: 5},
    },
    ('132', '0,3,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 132},
        7: {0: 404, 1: 25},
        8: {0: 1119, 1: 286, 2: 25},
        9: {0: 2762, 1: 1649, 2: 426, 3: 25},
    },
    ('132', '0,4,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 28, 1: 14},
        6: {0: 48, 1: 70, 2: 14},
        7: {0: 75, 1: 214, 2: 126, 3: 14},
        8: {0: 110, 1: 514, 2: 596, 3: 196, 4: 14},
        9: {0: 154, 1: 1064, 2: 2030, 3: 1320, 4: 280, 5: 14},
    },
    ('132', '0,5,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 90, 1: 42},
        7: {0: 165, 1: 222, 2: 42},
        8: {0: 275, 1: 717, 2: 396, 3: 42},
        9: {0: 429, 1: 1817, 2: 1962, 3: 612, 4: 42},
    },
    ('132', '1,1,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 3, 1: 2},
        4: {0: 4, 1: 8, 2: 2},
        5: {0: 5, 1: 20, 2: 15, 3: 2},
        6: {0: 6, 1: 40, 2: 60, 3: 24, 4: 2},
        7: {0: 7, 1: 70, 2: 175, 3: 140, 4: 35, 5: 2},
        8: {0: 8, 1: 112, 2: 420, 3: 560, 4: 280, 5: 48, 6: 2},
        9: {0: 9, 1: 168, 2: 882, 3: 1764, 4: 1470, 5: 504, 6: 63, 7: 2},
    },
    ('132', '1,1,e,1'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 10, 1: 4},
        5: {0: 17, 1: 21, 2: 4},
        6: {0: 26, 1: 65, 2: 37, 3: 4},
        7: {0: 37, 1: 155, 2: 176, 3: 57, 4: 4},
        8: {0: 50, 1: 315, 2: 595, 3: 385, 4: 81, 5: 4},
        9: {0: 65, 1: 574, 2: 1624, 3: 1750, 4: 736, 5: 109, 6: 4},
    },
    ('132', '1,1,e,2'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 32, 1: 10},
        6: {0: 62, 1: 60, 2: 10},
        7: {0: 107, 1: 209, 2: 103, 3: 10},
        8: {0: 170, 1: 554, 2: 540, 3: 156, 4: 10},
        9: {0: 254, 1: 1239, 2: 1995, 3: 1145, 4: 219, 5: 10},
    },
    ('132', '1,1,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 104, 1: 28},
        7: {0: 219, 1: 182, 2: 28},
        8: {0: 410, 1: 684, 2: 308, 3: 28},
        9: {0: 704, 1: 1948, 2: 1720, 3: 462, 4: 28},
    },
    ('132', '1,2,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 9, 1: 5},
        5: {0: 14, 1: 23, 2: 5},
        6: {0: 20, 1: 65, 2: 42, 3: 5},
        7: {0: 27, 1: 145, 2: 186, 3: 66, 4: 5},
        8: {0: 35, 1: 280, 2: 595, 3: 420, 4: 95, 5: 5},
        9: {0: 44, 1: 490, 2: 1554, 3: 1820, 4: 820, 5: 129, 6: 5},
    },
    ('132', '1,2,e,2'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 107, 1: 25},
        7: {0: 233, 1: 171, 2: 25},
        8: {0: 450, 1: 669, 2: 286, 3: 25},
        9: {0: 794, 1: 1968, 2: 1649, 3: 426, 4: 25},
    },
    ('132', '1,2,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 132},
        7: {0: 359, 1: 70},
        8: {0: 842, 1: 518, 2: 70},
        9: {0: 1754, 1: 2184, 2: 854, 3: 70},
        10: {0: 3332, 1: 6896, 2: 5238, 3: 1260, 4: 70},
    },
    ('132', '1,3,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 28, 1: 14},
        6: {0: 48, 1: 70, 2: 14},
        7: {0: 75, 1: 214, 2: 126, 3: 14},
        8: {0: 110, 1: 514, 2: 596, 3: 196, 4: 14},
        9: {0: 154, 1: 1064, 2: 2030, 3: 1320, 4: 280, 5: 14},
    },
    ('132', '1,3,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 132},
        7: {0: 429},
        8: {0: 1234, 1: 196},
        9: {0: 3098, 1: 1568, 2: 196},
        10: {0: 6932, 1: 7120, 2: 2548, 3: 196},
        11: {0: 14137, 1: 24117, 2: 16612, 3: 3724, 4: 196},
    },
    ('132', '2,1,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 11, 1: 3},
        5: {0: 23, 1: 16, 2: 3},
        6: {0: 47, 1: 56, 2: 26, 3: 3},
        7: {0: 95, 1: 163, 2: 129, 3: 39, 4: 3},
        8: {0: 191, 1: 429, 2: 489, 3: 263, 4: 55, 5: 3},
        9: {0: 383, 1: 1062, 2: 1583, 3: 1270, 4: 487, 5: 74, 6: 3},
    },
    ('132', '2,1,e,1'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 33, 1: 9},
        6: {0: 71, 1: 52, 2: 9},
        7: {0: 146, 1: 189, 2: 85, 3: 9},
        8: {0: 294, 1: 557, 2: 443, 3: 127, 4: 9},
        9: {0: 587, 1: 1463, 2: 1722, 3: 903, 4: 178, 5: 9},
    },
    ('132', '2,1,e,2'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 105, 1: 27},
        7: {0: 235, 1: 167, 2: 27},
        8: {0: 494, 1: 637, 2: 272, 3: 27},
        9: {0: 1004, 1: 1938, 2: 1489, 3: 404, 4: 27},
    },
    ('132', '2,1,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 132},
        7: {0: 345, 1: 84},
        8: {0: 800, 1: 546, 2: 84},
        9: {0: 1724, 1: 2168, 2: 886, 3: 84},
        10: {0: 3557, 1: 6803, 2: 5042, 3: 1310, 4: 84},
    },
    ('132', '2,2,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 33, 1: 9},
        6: {0: 72, 1: 51, 2: 9},
        7: {0: 151, 1: 186, 2: 83, 3: 9},
        8: {0: 310, 1: 556, 2: 431, 3: 124, 4: 9},
        9: {0: 629, 1: 1487, 2: 1688, 3: 875, 4: 174, 5: 9},
    },
    ('132', '2,2,e,2'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 132},
        7: {0: 348, 1: 81},
        8: {0: 811, 1: 538, 2: 81},
        9: {0: 1747, 1: 2163, 2: 871, 3: 81},
        10: {0: 3587, 1: 6826, 2: 5017, 3: 1285, 4: 81},
    },
    ('132', '2,2,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 132},
        7: {0: 429},
        8: {0: 1178, 1: 252},
        9: {0: 2848, 1: 1762, 2: 252},
        10: {0: 6311, 1: 7395, 2: 2838, 3: 252},
        11: {0: 13201, 1: 24156, 2: 17011, 3: 4166, 4: 252},
    },
    ('132', '2,3,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 104, 1: 28},
        7: {0: 235, 1: 166, 2: 28},
        8: {0: 505, 1: 627, 2: 270, 3: 28},
        9: {0: 1054, 1: 1924, 2: 1454, 3: 402, 4: 28},
    },
    ('132', '2,3,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 132},
        7: {0: 429},
        8: {0: 1430},
        9: {0: 4078, 1: 784},
        10: {0: 10236, 1: 5776, 2: 784},
        11: {0: 23405, 1: 25349, 2: 9248, 3: 784},
        12: {0: 50086, 1: 85921, 2: 57717, 3: 13504, 4: 784},
    },
    ('132', '3,1,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 38, 1: 4},
        6: {0: 101, 1: 27, 2: 4},
        7: {0: 266, 1: 119, 2: 40, 3: 4},
        8: {0: 698, 1: 439, 2: 232, 3: 57, 4: 4},
        9: {0: 1829, 1: 1477, 2: 1044, 3: 430, 4: 78, 5: 4},
    },
    ('132', '3,1,e,1'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 116, 1: 16},
        7: {0: 308, 1: 105, 2: 16},
        8: {0: 807, 1: 446, 2: 161, 3: 16},
        9: {0: 2108, 1: 1586, 2: 919, 3: 233, 4: 16},
        10: {0: 5507, 1: 5169, 2: 4029, 3: 1754, 4: 321, 5: 16},
    },
    ('132', '3,1,e,2'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 132},
        7: {0: 373, 1: 56},
        8: {0: 998, 1: 376, 2: 56},
        9: {0: 2615, 1: 1609, 2: 582, 3: 56},
        10: {0: 6813, 1: 5701, 2: 3382, 3: 844, 4: 56},
    },
    ('132', '3,1,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 132},
        7: {0: 429},
        8: {0: 1238, 1: 192},
        9: {0: 3347, 1: 1323, 2: 192},
        10: {0: 8798, 1: 5751, 2: 2055, 3: 192},
        11: {0: 22909, 1: 20509, 2: 12197, 3: 2979, 4: 192},
    },
    ('132', '3,2,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 118, 1: 14},
        7: {0: 319, 1: 96, 2: 14},
        8: {0: 847, 1: 425, 2: 144, 3: 14},
        9: {0: 2231, 1: 1563, 2: 848, 3: 206, 4: 14},
    },
    ('132', '3,2,e,2'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 132},
        7: {0: 429},
        8: {0: 1234, 1: 196},
        9: {0: 3314, 1: 1352, 2: 196},
        10: {0: 8643, 1: 5849, 2: 2108, 3: 196},
        11: {0: 22345, 1: 20688, 2: 12497, 3: 3060, 4: 196},
    },
    ('132', '3,2,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 132},
        7: {0: 429},
        8: {0: 1430},
        9: {0: 4190, 1: 672},
        10: {0: 11354, 1: 4770, 2: 672},
        11: {0: 29639, 1: 21023, 2: 7452, 3: 672},
        12: {0: 76326, 1: 75014, 2: 45194, 3: 10806, 4: 672},
    },
    ('132', '3,3,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 132},
        7: {0: 381, 1: 48},
        8: {0: 1046, 1: 336, 2: 48},
        9: {0: 2801, 1: 1506, 2: 507, 3: 48},
    },
    ('132', '3,3,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 132},
        7: {0: 429},
        8: {0: 1430},
        9: {0: 4862},
        10: {0: 14492, 1: 2304},
        11: {0: 39625, 1: 16857, 2: 2304},
        12: {0: 103494, 1: 75853, 2: 26361, 3: 2304},
        13: {0: 265047, 1: 273660, 2: 163720, 3: 38169, 4: 2304},
    },
    ('132', 'e,0,e,0'): {
        0: {0: 1},
        1: {1: 1},
        2: {0: 1, 2: 1},
        3: {0: 2, 1: 2, 3: 1},
        4: {0: 6, 1: 4, 2: 3, 4: 1},
        5: {0: 18, 1: 13, 2: 6, 3: 4, 5: 1},
        6: {0: 57, 1: 40, 2: 21, 3: 8, 4: 5, 6: 1},
        7: {0: 186, 1: 130, 2: 66, 3: 30, 4: 10, 5: 6, 7: 1},
        8: {0: 622, 1: 432, 2: 220, 3: 96, 4: 40, 5: 12, 6: 7, 8: 1},
        9: {0: 2120, 1: 1466, 2: 744, 3: 328, 4: 130, 5: 51, 6: 14, 7: 8, 9: 1},
    },
    ('132', 'e,1,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 1, 1: 1},
        3: {0: 3, 1: 1, 2: 1},
        4: {0: 8, 1: 4, 2: 1, 3: 1},
        5: {0: 24, 1: 11, 2: 5, 3: 1, 4: 1},
        6: {0: 75, 1: 35, 2: 14, 3: 6, 4: 1, 5: 1},
        7: {0: 243, 1: 113, 2: 47, 3: 17, 4: 7, 5: 1, 6: 1},
        8: {0: 808, 1: 376, 2: 156, 3: 60, 4: 20, 5: 8, 6: 1, 7: 1},
        9: {0: 2742, 1: 1276, 2: 532, 3: 204, 4: 74, 5: 23, 6: 9, 7: 1, 8: 1},
    },
    ('132', 'e,1,e,1'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 4, 1: 1},
        4: {0: 11, 1: 2, 2: 1},
        5: {0: 32, 1: 7, 2: 2, 3: 1},
        6: {0: 99, 1: 22, 2: 8, 3: 2, 4: 1},
        7: {0: 318, 1: 73, 2: 26, 3: 9, 4: 2, 5: 1},
        8: {0: 1051, 1: 246, 2: 90, 3: 30, 4: 10, 5: 2, 6: 1},
        9: {0: 3550, 1: 844, 2: 312, 3: 108, 4: 34, 5: 11, 6: 2, 7: 1},
    },
    ('132', 'e,1,e,2'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 12, 1: 2},
        5: {0: 35, 1: 5, 2: 2},
        6: {0: 107, 1: 18, 2: 5, 3: 2},
        7: {0: 342, 1: 60, 2: 20, 3: 5, 4: 2},
        8: {0: 1126, 1: 206, 2: 69, 3: 22, 4: 5, 5: 2},
        9: {0: 3793, 1: 714, 2: 246, 3: 78, 4: 24, 5: 5, 6: 2},
    },
    ('132', 'e,1,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 37, 1: 5},
        6: {0: 113, 1: 14, 2: 5},
        7: {0: 358, 1: 52, 2: 14, 3: 5},
        8: {0: 1174, 1: 180, 2: 57, 3: 14, 4: 5},
        9: {0: 3943, 1: 634, 2: 204, 3: 62, 4: 14, 5: 5},
    },
    ('132', 'e,2,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 3, 1: 2},
        4: {0: 9, 1: 3, 2: 2},
        5: {0: 26, 1: 11, 2: 3, 3: 2},
        6: {0: 81, 1: 33, 2: 13, 3: 3, 4: 2},
        7: {0: 261, 1: 108, 2: 40, 3: 15, 4: 3, 5: 2},
        8: {0: 865, 1: 359, 2: 137, 3: 47, 4: 17, 5: 3, 6: 2},
        9: {0: 2928, 1: 1220, 2: 468, 3: 168, 4: 54, 5: 19, 6: 3, 7: 2},
    },
    ('132', 'e,2,e,2'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 38, 1: 4},
        6: {0: 116, 1: 12, 2: 4},
        7: {0: 368, 1: 45, 2: 12, 3: 4},
        8: {0: 1207, 1: 158, 2: 49, 3: 12, 4: 4},
        9: {0: 4054, 1: 561, 2: 178, 3: 53, 4: 12, 5: 4},
    },
    ('132', 'e,2,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 122, 1: 10},
        7: {0: 386, 1: 33, 2: 10},
        8: {0: 1259, 1: 128, 2: 33, 3: 10},
        9: {0: 4216, 1: 465, 2: 138, 3: 33, 4: 10},
    },
    ('132', 'e,3,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 9, 1: 5},
        5: {0: 28, 1: 9, 2: 5},
        6: {0: 85, 1: 33, 2: 9, 3: 5},
        7: {0: 273, 1: 104, 2: 38, 3: 9, 4: 5},
        8: {0: 901, 1: 349, 2: 123, 3: 43, 4: 9, 5: 5},
        9: {0: 3042, 1: 1186, 2: 430, 3: 142, 4: 48, 5: 9, 6: 5},
    },
    ('132', 'e,3,e,3'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 132},
        7: {0: 404, 1: 25},
        8: {0: 1315, 1: 90, 2: 25},
        9: {0: 4386, 1: 361, 2: 90, 3: 25},
    },
    ('132', 'e,4,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 28, 1: 14},
        6: {0: 90, 1: 28, 2: 14},
        7: {0: 283, 1: 104, 2: 28, 3: 14},
        8: {0: 931, 1: 339, 2: 118, 3: 28, 4: 14},
        9: {0: 3132, 1: 1161, 2: 395, 3: 132, 4: 28, 5: 14},
    },
    ('132', 'e,5,e,0'): {
        0: {0: 1},
        1: {0: 1},
        2: {0: 2},
        3: {0: 5},
        4: {0: 14},
        5: {0: 42},
        6: {0: 90, 1: 42},
        7: {0: 297, 1: 90, 2: 42},
        8: {0: 959, 1: 339, 2: 90, 3: 42},
        9: {0: 3216, 1: 1133, 2: 381, 3: 90, 4: 42},
    },
}
