"""Reference eigenvalue tables for the regression suite and the CLI.

Each table mirrors an independently published reference computation for the
catalog domains; the ``tables`` CLI subcommand regenerates them at the
documented desk-scale parameters and diffs cell by cell.  Column values are
transcribed verbatim; inside clusters of (near-)degenerate rows the source
lists every column in ascending order, so comparisons sort both sides.

One cell is stored in corrected form: the first-order entry of the (4,4)
row of the circle perturbation table.  Two independent evaluations here
(exact moment-integral recurrences and direct 200-node quadrature of the
diagonal element) both give 97.3347, while the original prints 97.3221,
inconsistent at 1.3e-4 relative with the same source's own circle spectra;
the original value is kept alongside for reference.
"""

import math

import mpmath as mp

PI = math.pi

# --- circle via the Galerkin method: N -> (E0, E12, E34) ------------------
T1_CIRCLE_CMM = {
    10: (5.7831903186, 14.682015349, 26.374703996),
    20: (5.7831860077, 14.681971199, 26.374617574),
    30: (5.7831859657, 14.681970679, 26.374616505),
    40: (5.7831859633, 14.681970647, 26.374616438),
    50: (5.7831859630, 14.681970643, 26.374616430),
    60: (5.7831859630, 14.681970642, 26.374616428),
}
CIRCLE_EXACT = (5.7831859629, 14.681970642, 26.374616427)

# --- circle via the collocation method: N -> (E0, E12, E34) ---------------
T2_CIRCLE_CCM = {
    20: (5.7833478471, 14.683030231, 26.376321659),
    40: (5.7831962133, 14.682036989, 26.374723431),
    60: (5.7831879924, 14.681983747, 26.374637569),
    80: (5.7831866056, 14.681974789, 26.374623117),
    100: (5.7831862262, 14.681972340, 26.374619167),
}

# --- circle by square-basis perturbation theory (N_int = 20) --------------
# rows: (label, degeneracy, PT0, PT1, PT2, PT3, exact)
T3_CIRCLE_PT = [
    ((1, 1), 1, 4.93480, 5.66472, 5.76740, 5.78118, 5.78319),
    ((1, 2), 2, 12.3370, 14.4197, 14.6695, 14.6844, 14.68197),
    ((2, 1), 2, 12.3370, 14.4197, 14.6695, 14.6844, 14.68197),
    ((2, 2), 1, 19.7392, 25.0228, 26.1714, 26.3593, 26.37462),
    ((1, 3), 2, 24.6740, 26.4137, 26.4007, 26.3785, 26.37462),
    ((3, 1), 2, 24.6740, 30.2612, 30.7573, 30.5467, 30.47126),
    ((2, 3), 2, 32.0762, 40.3174, 41.4936, 41.1156, 40.70647),
    ((3, 2), 2, 32.0762, 40.3174, 41.4936, 41.1156, 40.70647),
    ((1, 4), 2, 41.9458, 47.7922, 48.5522, 48.9791, 49.21846),
    ((4, 1), 2, 41.9458, 47.7922, 48.5522, 48.9791, 49.21846),
    ((3, 3), 1, 44.4132, 55.1980, 57.6642, 57.9679, 57.58294),
    ((2, 4), 2, 49.3480, 57.1883, 57.7144, 57.6217, 57.58294),
    ((4, 2), 2, 49.3480, 66.4508, 71.4408, 72.0826, 70.85000),
    ((3, 4), 2, 61.6850, 76.3544, 77.2464, 76.2107, 76.93893),
    ((4, 3), 2, 61.6850, 76.3544, 77.2464, 76.2107, 76.93893),
    ((1, 5), 2, 64.1524, 72.9892, 71.1717, 70.3712, 70.85000),
    ((5, 1), 2, 64.1524, 72.5674, 73.5746, 74.6076, 74.88701),
    ((5, 2), 2, 71.5546, 89.4650, 96.8822, 99.3590, 95.27757),
    ((2, 5), 2, 71.5546, 89.4650, 96.8822, 99.3590, 95.27757),
    ((4, 4), 1, 78.9568, 97.3347, 97.4219, 96.4281, 98.72627),
]
# original print of the corrected (4,4) first-order cell (see module docstring)
T3_44_PT1_AS_PRINTED = 97.3221

# --- deformed square, closed second-order shift (E - eps)/alpha^2 ---------
# canonical level order: ascending box energy, ties by ascending shift
TPT_SHIFTS = [
    -12.0, -63.15197799, -7.649505501, -12.0, -214.5883271, -13.19388958,
    -24.80336862, 10.03674606, -569.9586259, -21.95180463, -12.0,
    -44.66052201, 84.89208802, -39.50940841, 34.0699668, -1273.042285,
    -33.44310862, -70.04918774, 254.8899234, -12.0, -70.55997503,
    137.7717825, -2508.565211, -47.56994783, -100.9237065, 574.980025,
    -53.60145365, 51.44555258, -106.3455495, 331.632198, -4502.275663,
    -64.30174616, -12.0, -96.08384485, 170.4178176, -137.3156766,
    1112.43464, -147.5143637, 655.6568115, -67.40630759, 66.8009496,
    -7520.958743, -142.0360122, -83.62637707, 369.3064766, -179.2486248,
    1946.790496, -12.0, -194.3894759, 1157.199583,
]

F_VALUES = {
    1: PI ** 4 / 3072 - 5 * PI ** 2 / 1024,
    2: PI ** 4 / 49152 - 5 * PI ** 2 / 65536,
    3: PI ** 4 / 248832 - 5 * PI ** 2 / 746496,
}

# --- general-map first-order coefficients (T4) -----------------------------
# For each state: {j: coefficient of the z^j/j map-term strength} as printed,
# evaluated at high precision.  Dagger pairs also carry the off-diagonal
# bracket controlling the first-order lifting.


def _eval_t4():
    with mp.workdps(60):
        pi = mp.pi
        p2, p4, p6, p8 = pi ** 2, pi ** 4, pi ** 6, pi ** 8
        p10, p12, p14, p16, p18 = pi ** 10, pi ** 12, pi ** 14, pi ** 16, pi ** 18
        f = mp.mpf
        diag = {
            (1, 1): {
                1: f(2),
                5: 48 / p4 - f(8) / 15,
                9: f(32) / 45 + 80640 / p8 - 896 / p4,
                13: -f(128) / 91 + 958003200 / p12 - 10644480 / p8 + 8448 / p4,
                17: f(512) / 153 + 41845579776000 / p16 - 464950886400 / p12
                    + 369008640 / p8 - 61440 / p4,
            },
            (1, 2): {
                1: f(2),
                3: -3 / p2,
                5: 39 / p4 - f(8) / 15,
                7: 3 * (8 * p4 - 765) / (2 * p6),
                9: f(32) / 45 + 64575 / p8 - 728 / p4,
                11: -3 * (3869775 - 42840 * p4 + 32 * p8) / (2 * p10),
                13: -f(128) / 91 + 1532898675 / (2 * p12) - 8523900 / p8 + 6864 / p4,
                15: 3 * (-185977516725 + 2065943880 * p4 - 1633632 * p8
                         + 256 * p12) / (4 * p14),
                17: f(512) / 153 + 33476591523375 / p16 - 371983411800 / p12
                    + 295495200 / p8 - 49920 / p4,
                19: -3 * (6829192106611875 - 75878826823800 * p4
                          + 60207507360 * p8 - 9987840 * p12 + 512 * p16) / (2 * p18),
            },
            (2, 2): {
                1: f(2),
                5: 3 / p4 - f(8) / 15,
                9: f(32) / 45 + 315 / p8 - 56 / p4,
                13: -f(128) / 91 + 467775 / (2 * p12) - 41580 / p8 + 528 / p4,
                17: f(512) / 153 + 638512875 / p16 - 113513400 / p12
                    + 1441440 / p8 - 3840 / p4,
            },
            (1, 3): {
                1: f(2),
                3: -32 / (9 * p2),
                5: f(8) / 135 * (730 / p4 - 9),
                7: 128 * (9 * p4 - 820) / (81 * p6),
                9: 32 * (8267000 - 91980 * p4 + 81 * p8) / (3645 * p8),
            },
            (2, 3): {
                1: f(2),
                3: -5 / (9 * p2),
                5: 61 / (27 * p4) - f(8) / 15,
                7: 5 * (72 * p4 - 485) / (162 * p6),
                9: f(32) / 45 + 161735 / (729 * p8) - 3416 / (81 * p4),
                11: -5 * (1419775 - 244440 * p4 + 2592 * p8) / (1458 * p10),
                13: -f(128) / 91 + 710673425 / (4374 * p12) - 7116340 / (243 * p8)
                    + 10736 / (27 * p4),
                15: 5 * (-115834293575 + 20465204760 * p4 - 251675424 * p8
                         + 559872 * p12) / (78732 * p14),
                17: f(512) / 153 + 26120117398375 / (59049 * p16)
                    - 517370253400 / (6561 * p12) + 740099360 / (729 * p8)
                    - 78080 / (27 * p4),
                19: -5 * (798494934111875 - 141781175335800 * p4
                          + 1789243616160 * p8 - 4616144640 * p12
                          + 3359232 * p16) / (118098 * p18),
            },
            (1, 4): {
                1: f(2),
                3: -15 / (4 * p2),
                5: 723 / (16 * p4) - f(8) / 15,
                7: 15 / p2 - 173475 / (128 * p6),
                9: f(32) / 45 + 19429515 / (256 * p8) - 1687 / (2 * p4),
                11: -15 * (932615775 - 10362240 * p4 + 8192 * p8) / (2048 * p10),
                13: -f(128) / 91 + 7386317405775 / (8192 * p12)
                    - 641173995 / (64 * p8) + 7953 / p4,
                15: 15 * (-716965206682725 + 7966279601280 * p4
                          - 6322348032 * p8 + 1048576 * p12) / (65536 * p14),
                17: f(512) / 153 + 2581074744696322875 / (65536 * p16)
                    - 224051627975175 / (512 * p12) + 2778420645 / (8 * p8)
                    - 57840 / p4,
                19: -6318470974918905928125 / (524288 * p18)
                    + 548478383112284625 / (4096 * p14)
                    - 6801566847075 / (64 * p10) + 17694450 / p6 - 960 / p2,
            },
            (3, 3): {
                1: f(2),
                5: 16 / (27 * p4) - f(8) / 15,
                9: f(32) / 3645 * (81 + 1400 / p8 - 1260 / p4),
                13: -f(128) / 91 + 3942400 / (2187 * p12) - 394240 / (243 * p8)
                    + 2816 / (27 * p4),
                17: 512 * (1905904000 - 1715313600 * p4 + 110270160 * p8
                           - 1487160 * p12 + 6561 * p16) / (1003833 * p16),
            },
            (2, 4): {
                1: f(2),
                3: -3 / (4 * p2),
                5: 39 / (16 * p4) - f(8) / 15,
                7: 3 / p2 - 2295 / (128 * p6),
                9: f(32) / 45 + 64575 / (256 * p8) - 91 / (2 * p4),
            },
            (3, 4): {
                1: f(2),
                3: -7 / (36 * p2),
                5: 193 / (432 * p4) - f(8) / 15,
                7: 7 * (1152 * p4 - 1685) / (10368 * p6),
                9: f(32) / 45 + 1550675 / (186624 * p8) - 1351 / (162 * p4),
                11: -7 * (16245775 - 13587840 * p4 + 663552 * p8) / (1492992 * p10),
                13: -f(128) / 91 + 21037818725 / (17915904 * p12)
                    - 17057425 / (15552 * p8) + 2123 / (27 * p4),
                15: 7 * (-4256172495575 + 3746769586560 * p4 - 223840641024 * p8
                         + 2293235712 * p12) / (1289945088 * p14),
                17: f(512) / 153 + 2421160144277875 / (3869835264 * p16)
                    - 1914441503975 / (3359232 * p12) + 221746525 / (5832 * p8)
                    - 15440 / (27 * p4),
                19: -7 * (93255273798561875 - 83352882153340800 * p4
                          + 5241195398799360 * p8 - 65689736970240 * p12
                          + 220150628352 * p16) / (30958682112 * p18),
            },
            (1, 5): {
                1: f(2),
                3: -96 / (25 * p2),
                5: 28848 / (625 * p4) - f(8) / 15,
                7: 384 * (125 * p4 - 11268) / (3125 * p6),
                9: f(32) / 45 + 6057692928 / (78125 * p8) - 538496 / (625 * p4),
            },
            (2, 5): {
                1: f(2),
                3: -21 / (25 * p2),
                5: 1623 / (625 * p4) - f(8) / 15,
                7: 21 * (1000 * p4 - 5769) / (6250 * p6),
                9: f(32) / 45 + 21217203 / (78125 * p8) - 30296 / (625 * p4),
                11: -21 * (227299527 - 40383000 * p4 + 500000 * p8) / (781250 * p10),
                13: -f(128) / 91 + 3938040945531 / (19531250 * p12)
                    - 2800670796 / (78125 * p8) + 285648 / (625 * p4),
                15: 21 * (-426619774001421 + 75842275509000 * p4
                          - 962461500000 * p8 + 2500000000 * p12) / (976562500 * p14),
                17: f(512) / 153 + 671926478816876283 / (1220703125 * p16)
                    - 955631269448856 / (9765625 * p12) + 97089920928 / (78125 * p8)
                    - 415488 / (125 * p4),
                19: -21 * (122386598885647295199 - 21757608474072471000 * p4
                           + 276282575068500000 * p8 - 735547500000000 * p12
                           + 625000000000 * p16) / (61035156250 * p18),
            },
            (4, 4): {
                1: f(2),
                5: 3 / (16 * p4) - f(8) / 15,
                9: f(32) / 45 + 315 / (256 * p8) - 7 / (2 * p4),
                13: -f(128) / 91 + 467775 / (8192 * p12) - 10395 / (64 * p8)
                    + 33 / p4,
                17: f(512) / 153 + 638512875 / (65536 * p16) - 14189175 / (512 * p12)
                    + 45045 / (8 * p8) - 240 / p4,
            },
        }
        split = {
            (1, 3): {5: 27 / p4, 9: -63 * (8 * p4 - 765) / p8},
            (2, 4): {5: 1024 / (27 * p4), 9: -57344 * (9 * p4 - 820) / (729 * p8)},
            (1, 5): {5: 25 / (27 * p4), 9: -175 * (72 * p4 - 485) / (729 * p8)},
        }
        diag_f = {lvl: {j: float(v) for j, v in d.items()} for lvl, d in diag.items()}
        split_f = {lvl: {j: float(v) for j, v in d.items()} for lvl, d in split.items()}
    return diag_f, split_f


T4_DIAGONAL, T4_SPLIT = _eval_t4()
# pairs whose first-order theory lifts the degeneracy, within the first 20 levels
T4_SPLIT_PAIRS = {(1, 3), (2, 4), (1, 5)}

# --- quadratic disk deformation (T5): rows of (PT0, PT2, CCM) -------------
T5_LABELS = [
    (0, 1, 1), (1, 1, 1), (1, 1, 2), (2, 1, 1), (2, 1, 2), (0, 2, 1),
    (3, 1, 1), (3, 1, 2), (1, 2, 1), (1, 2, 2), (4, 1, 1), (4, 1, 2),
    (2, 2, 1), (2, 2, 2), (0, 3, 1), (5, 1, 1), (5, 1, 2), (3, 2, 1),
    (3, 2, 2), (6, 1, 1), (6, 1, 2), (1, 3, 1), (1, 3, 2), (4, 2, 1),
    (4, 2, 2), (7, 1, 1), (7, 1, 2), (2, 3, 1), (2, 3, 2), (0, 4, 1),
    (8, 1, 1), (8, 1, 2), (5, 2, 1), (5, 2, 2), (3, 3, 1), (3, 3, 2),
    (1, 4, 1), (1, 4, 2), (9, 1, 1), (9, 1, 2),
]

T5_LAMBDA_001 = [
    (5.78434, 5.78319, 5.78319), (14.6849, 14.6805, 14.6805),
    (14.6849, 14.6834, 14.6834), (26.3799, 26.3746, 26.3746),
    (26.3799, 26.3746, 26.3746), (30.4774, 30.4713, 30.4713),
    (40.7146, 40.7065, 40.7065), (40.7146, 40.7065, 40.7065),
    (49.2283, 49.2135, 49.2136), (49.2283, 49.2234, 49.2234),
    (57.5945, 57.5829, 57.5830), (57.5945, 57.5829, 57.5830),
    (70.8642, 70.8500, 70.8500), (70.8642, 70.8500, 70.8500),
    (74.9020, 74.8870, 74.8871), (76.9543, 76.9389, 76.9390),
    (76.9543, 76.9389, 76.9390), (95.2966, 95.2776, 95.2776),
    (95.2966, 95.2776, 95.2776), (98.7460, 98.7263, 98.7263),
    (98.7460, 98.7263, 98.7263), (103.520, 103.489, 103.489),
    (103.520, 103.510, 103.510), (122.452, 122.428, 122.428),
    (122.452, 122.428, 122.428), (122.932, 122.908, 122.908),
    (122.932, 122.908, 122.908), (135.048, 135.021, 135.021),
    (135.048, 135.021, 135.021), (139.068, 139.040, 139.041),
    (149.483, 149.453, 149.453), (149.483, 149.453, 149.453),
    (152.272, 152.241, 152.241), (152.272, 152.241, 152.241),
    (169.429, 169.395, 169.396), (169.429, 169.395, 169.396),
    (177.556, 177.503, 177.503), (177.556, 177.539, 177.539),
    (178.373, 178.337, 178.338), (178.373, 178.337, 178.338),
]

T5_LAMBDA_005 = [
    (5.81210, 5.78304, 5.78325), (14.7554, 14.6447, 14.646),
    (14.7554, 14.7185, 14.7183), (26.5065, 26.3740, 26.3734),
    (26.5065, 26.3740, 26.3741), (30.6236, 30.4705, 30.4739),
    (40.9100, 40.7054, 40.7056), (40.9100, 40.7054, 40.7056),
    (49.4645, 49.0936, 49.0991), (49.4645, 49.3409, 49.3415),
    (57.8709, 57.5815, 57.582), (57.8709, 57.5815, 57.582),
    (71.2042, 70.8482, 70.8389), (71.2042, 70.8482, 70.8501),
    (75.2614, 74.8851, 74.9035), (77.3236, 76.9370, 76.9378),
    (77.3236, 76.9370, 76.9378), (95.7540, 95.2752, 95.2734),
    (95.7540, 95.2752, 95.2736), (99.2199, 98.7238, 98.7251),
    (99.2199, 98.7238, 98.7251), (104.017, 103.237, 103.253),
    (104.017, 103.757, 103.763), (123.040, 122.425, 122.422),
    (123.040, 122.425, 122.422), (123.522, 122.904, 122.908),
    (123.522, 122.904, 122.908), (135.696, 135.017, 134.978),
    (135.696, 135.017, 135.025), (139.735, 139.037, 139.098),
    (150.200, 149.449, 149.451), (150.200, 149.449, 149.451),
    (153.002, 152.237, 152.238), (153.002, 152.237, 152.238),
    (170.242, 169.391, 169.383), (170.242, 169.391, 169.384),
    (178.408, 177.070, 177.108), (178.408, 177.962, 177.982),
    (179.229, 178.333, 178.335), (179.229, 178.333, 178.335),
]

ROBNIK_SPLIT_QUADRATIC = 29.3639418     # doublet split, lambda^2 coefficient
ROBNIK_SPLIT_QUARTIC = 58.7278836       # lambda^4 from the area dilatation

# --- regular polygons (T6): rows of (PT0, PT1, CCM) per polygon -----------
T6_LABELS = [
    (0, 1, 1), (1, 1, 1), (1, 1, 2), (2, 1, 1), (2, 1, 2), (0, 2, 1),
    (3, 1, 1), (3, 1, 2), (1, 2, 1), (1, 2, 2), (4, 1, 1), (4, 1, 2),
    (2, 2, 1), (2, 2, 2), (0, 3, 1), (5, 1, 1), (5, 1, 2), (3, 2, 1),
    (3, 2, 2), (6, 1, 1), (6, 1, 2), (1, 3, 1), (1, 3, 2), (4, 2, 1),
    (4, 2, 2), (7, 1, 1), (7, 1, 2), (2, 3, 1), (2, 3, 2), (0, 4, 1),
    (8, 1, 1), (8, 1, 2), (5, 2, 1), (5, 2, 2), (3, 3, 1), (3, 3, 2),
    (1, 4, 1), (1, 4, 2), (9, 1, 1), (9, 1, 2),
]

T6_OCTAGON = [
    (6.48669, 6.48505, 6.48493), (16.468, 16.4581, 16.4561),
    (16.468, 16.4581, 16.4561), (29.583, 29.5530, 29.5406),
    (29.583, 29.5530, 29.5406), (34.178, 34.1407, 34.1245),
    (45.6583, 45.5912, 45.5298), (45.6583, 45.5912, 45.5298),
    (55.2057, 55.1197, 55.0498), (55.2057, 55.1197, 55.0498),
    (64.5877, 62.6348, 62.5959), (64.5877, 66.2878, 66.2775),
    (79.4687, 79.3097, 79.0194), (79.4687, 79.3097, 79.0199),
    (83.9968, 83.8282, 83.5906), (86.2983, 86.0854, 85.8297),
    (86.2983, 86.0854, 85.8297), (106.868, 106.609, 106.713),
    (106.868, 106.609, 106.713), (110.736, 110.405, 110.452),
    (110.736, 110.405, 110.452), (116.090, 115.812, 114.883),
    (116.090, 115.812, 114.883), (137.321, 133.003, 132.733),
    (137.321, 137.373, 137.954), (137.859, 137.373, 137.954),
    (137.859, 140.865, 140.802), (151.446, 151.031, 150.459),
    (151.446, 151.031, 150.461), (155.954, 155.530, 151.944),
    (167.633, 165.334, 168.290), (167.633, 168.569, 168.776),
    (170.761, 170.216, 168.776), (170.761, 170.216, 169.209),
    (190.002, 189.422, 189.910), (190.002, 189.422, 189.910),
    (199.116, 198.519, 192.516), (199.116, 198.519, 192.516),
    (200.032, 199.109, 204.554), (200.032, 199.109, 204.554),
]

T6_NONAGON = [
    (6.32407, 6.32314, 6.32309), (16.0551, 16.0495, 16.0486),
    (16.0551, 16.0495, 16.0486), (28.8413, 28.8241, 28.8185),
    (28.8413, 28.8241, 28.8186), (33.3211, 33.2994, 33.2920),
    (44.5136, 44.4747, 44.4501), (44.5136, 44.4747, 44.4501),
    (53.8217, 53.7708, 53.7391), (53.8217, 53.7708, 53.7391),
    (62.9685, 62.8946, 62.7662), (62.9685, 62.8946, 62.7662),
    (77.4763, 77.3810, 77.2694), (77.4763, 77.3810, 77.2696),
    (81.8909, 81.7892, 81.6829), (84.1347, 84.0094, 84.0635),
    (84.1347, 84.0094, 84.0635), (104.189, 104.032, 102.757),
    (104.189, 104.032, 102.757), (107.960, 107.763, 108.953),
    (107.960, 107.763, 108.953), (113.179, 113.009, 112.684),
    (113.179, 113.009, 112.684), (133.878, 133.641, 133.313),
    (133.878, 133.641, 133.313), (134.403, 134.113, 133.485),
    (134.403, 134.113, 133.485), (147.649, 147.391, 147.814),
    (147.649, 147.391, 147.815), (152.044, 151.780, 150.877),
    (163.431, 163.022, 162.822), (163.431, 163.022, 162.822),
    (166.480, 166.143, 166.165), (166.480, 166.143, 166.165),
    (185.238, 184.875, 183.416), (185.238, 184.875, 183.416),
    (194.124, 193.008, 193.117), (194.124, 193.748, 193.117),
    (195.017, 193.748, 193.659), (195.017, 195.913, 195.691),
]

T6_DECAGON = [
    (6.21258, 6.21202, 6.21200), (15.7721, 15.7687, 15.7682),
    (15.7721, 15.7687, 15.7682), (28.3329, 28.3224, 28.3197),
    (28.3329, 28.3224, 28.3197), (32.7337, 32.7204, 32.7166),
    (43.7289, 43.7050, 43.6936), (43.7289, 43.7050, 43.6937),
    (52.8729, 52.8412, 52.8254), (52.8729, 52.8412, 52.8255),
    (61.8584, 61.8128, 61.7682), (61.8584, 61.8128, 61.7682),
    (76.1106, 76.0505, 75.9987), (76.1106, 76.0505, 75.9988),
    (80.4473, 80.3828, 80.3302), (82.6516, 81.0526, 81.0237),
    (82.6516, 84.0950, 84.0826), (102.352, 102.252, 102.055),
    (102.352, 102.252, 102.055), (106.057, 105.934, 105.808),
    (106.057, 105.934, 105.808), (111.184, 111.075, 110.926),
    (111.184, 111.075, 110.927), (131.518, 131.366, 131.401),
    (131.518, 131.366, 131.401), (132.033, 131.851, 131.925),
    (132.033, 131.851, 131.926), (145.046, 144.879, 144.205),
    (145.046, 144.879, 144.205), (149.364, 149.192, 148.819),
    (160.550, 160.292, 160.168), (160.550, 160.292, 160.817),
    (163.545, 160.293, 160.817), (163.545, 166.360, 166.328),
    (181.973, 181.735, 181.436), (181.973, 181.735, 181.437),
    (190.702, 190.454, 186.961), (190.702, 190.454, 186.961),
    (191.579, 191.226, 194.384), (191.579, 191.226, 194.384),
]

T6_POLYGONS = {8: T6_OCTAGON, 9: T6_NONAGON, 10: T6_DECAGON}
# angular numbers whose doublets the first-order theory splits (first 40 levels)
T6_SPLIT_K = {8: {4, 8}, 9: {9}, 10: {5}}

# zeta(3) to double precision, for the cubic expansion coefficient
_ZETA3 = 1.2020569031595942854
POLYGON_EXPANSION = {2: 2 * PI ** 2 / 3, 3: 4 * _ZETA3, 4: 14 * PI ** 4 / 45}

# disk gap-ratio bound (j_11/j_01)^2 as usually quoted
PPW_BOUND = 2.539
