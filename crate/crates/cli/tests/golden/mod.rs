// Reference solution rows transcribed from the published tables for p = 17 and p = 23.
// Every row re-verifies arithmetically; the acceptance suite requires the computed
// reports to contain each row.

/// (n, x) with x^n + 1 = 0 in Z_17, even exponents.
pub const P17_TYPE0_EVEN: [(u64, u64); 14] = [(2, 13), (6, 13), (10, 13), (14, 13), (2, 4), (6, 4), (10, 4), (14, 4), (4, 9), (12, 9), (4, 8), (12, 8), (8, 3), (8, 14)];

/// (n, x, z) with x^n + 1 = z^n in Z_17.
pub const P17_TYPE1_EVEN: [(u64, u64, u64); 48] = [
    (2, 1, 6), (2, 16, 11), (14, 1, 3), (14, 16, 14),
    (2, 1, 11), (2, 16, 6), (14, 1, 14), (14, 16, 3),
    (2, 5, 3), (2, 12, 14), (14, 7, 6), (14, 10, 11),
    (2, 5, 14), (2, 12, 3), (14, 7, 11), (14, 10, 6),
    (2, 7, 4), (2, 10, 13), (14, 5, 13), (14, 12, 4),
    (2, 7, 13), (2, 10, 4), (14, 5, 4), (14, 12, 13),
    (6, 1, 5), (6, 16, 12), (10, 1, 7), (10, 16, 10),
    (6, 1, 12), (6, 16, 5), (10, 1, 10), (10, 16, 7),
    (6, 3, 4), (6, 14, 13), (10, 6, 13), (10, 11, 4),
    (6, 3, 13), (6, 14, 4), (10, 6, 4), (10, 11, 13),
    (6, 6, 7), (6, 11, 10), (10, 3, 5), (10, 14, 12),
    (6, 6, 10), (6, 11, 7), (10, 3, 12), (10, 14, 5),
];

/// (n, x, z) with x^n + 1 = z^n in Z_17.
pub const P17_TYPE1_ODD: [(u64, u64, u64); 128] = [
    (1, 1, 2), (1, 15, 16), (15, 1, 9), (15, 8, 16),
    (1, 2, 3), (1, 14, 15), (15, 9, 6), (15, 11, 8),
    (1, 3, 4), (1, 13, 14), (15, 6, 13), (15, 4, 11),
    (1, 4, 5), (1, 12, 13), (15, 13, 7), (15, 10, 4),
    (1, 5, 6), (1, 11, 12), (15, 7, 3), (15, 14, 10),
    (1, 6, 7), (1, 10, 11), (15, 3, 5), (15, 12, 14),
    (1, 7, 8), (1, 9, 10), (15, 5, 15), (15, 2, 12),
    (1, 8, 9), (1, 8, 9), (15, 15, 2), (15, 15, 2),
    (3, 1, 8), (3, 9, 16), (13, 1, 15), (13, 2, 16),
    (3, 2, 15), (3, 2, 15), (13, 9, 8), (13, 9, 8),
    (3, 3, 12), (3, 5, 14), (13, 6, 10), (13, 7, 11),
    (3, 4, 10), (3, 7, 13), (13, 13, 12), (13, 5, 4),
    (3, 5, 14), (3, 3, 12), (13, 7, 11), (13, 6, 10),
    (3, 6, 4), (3, 13, 11), (13, 3, 13), (13, 4, 14),
    (3, 7, 13), (3, 4, 10), (13, 5, 4), (13, 13, 12),
    (3, 8, 7), (3, 10, 9), (13, 15, 5), (13, 12, 2),
    (5, 1, 15), (5, 2, 16), (11, 1, 8), (11, 9, 16),
    (5, 2, 16), (5, 1, 15), (11, 9, 16), (11, 1, 8),
    (5, 3, 10), (5, 7, 14), (11, 6, 12), (11, 5, 11),
    (5, 4, 3), (5, 14, 13), (11, 13, 6), (11, 11, 4),
    (5, 5, 2), (5, 15, 12), (11, 7, 9), (11, 8, 10),
    (5, 6, 9), (5, 8, 11), (11, 3, 2), (11, 15, 14),
    (5, 7, 14), (5, 3, 10), (11, 5, 11), (11, 6, 12),
    (5, 8, 11), (5, 6, 9), (11, 15, 14), (11, 3, 2),
    (7, 1, 9), (7, 8, 16), (9, 1, 2), (9, 15, 16),
    (7, 2, 5), (7, 12, 15), (9, 9, 7), (9, 10, 8),
    (7, 3, 7), (7, 10, 14), (9, 6, 5), (9, 12, 11),
    (7, 4, 6), (7, 11, 13), (9, 13, 3), (9, 14, 4),
    (7, 5, 3), (7, 14, 12), (9, 7, 6), (9, 11, 10),
    (7, 6, 8), (7, 9, 11), (9, 3, 15), (9, 2, 14),
    (7, 7, 4), (7, 13, 10), (9, 5, 13), (9, 4, 12),
    (7, 8, 16), (7, 1, 9), (9, 15, 16), (9, 1, 2),
];

/// (n, x, z) with x^n + 1 = z^n in Z_23.
pub const P23_TYPE1_EVEN: [(u64, u64, u64); 200] = [
    (2, 1, 5), (2, 22, 18), (20, 1, 14), (20, 22, 9),
    (2, 1, 18), (2, 22, 5), (20, 1, 9), (20, 22, 14),
    (2, 5, 7), (2, 18, 16), (20, 14, 10), (20, 9, 13),
    (2, 5, 16), (2, 18, 7), (20, 14, 13), (20, 9, 10),
    (2, 7, 2), (2, 16, 21), (20, 10, 12), (20, 13, 11),
    (2, 7, 21), (2, 16, 2), (20, 10, 11), (20, 13, 12),
    (2, 9, 6), (2, 14, 17), (20, 18, 4), (20, 5, 19),
    (2, 9, 17), (2, 14, 6), (20, 18, 19), (20, 5, 4),
    (2, 10, 3), (2, 13, 20), (20, 7, 8), (20, 16, 15),
    (2, 10, 20), (2, 13, 3), (20, 7, 15), (20, 16, 8),
    (4, 1, 8), (4, 22, 15), (18, 1, 3), (18, 22, 20),
    (4, 1, 15), (4, 22, 8), (18, 1, 20), (18, 22, 3),
    (4, 3, 11), (4, 20, 12), (18, 8, 21), (18, 15, 2),
    (4, 3, 12), (4, 20, 11), (18, 8, 2), (18, 15, 21),
    (4, 4, 5), (4, 19, 18), (18, 6, 14), (18, 17, 9),
    (4, 4, 18), (4, 19, 5), (18, 6, 9), (18, 17, 14),
    (4, 6, 7), (4, 17, 16), (18, 4, 10), (18, 19, 13),
    (4, 6, 16), (4, 17, 7), (18, 4, 13), (18, 19, 10),
    (4, 8, 4), (4, 15, 19), (18, 3, 6), (18, 20, 17),
    (4, 8, 19), (4, 15, 4), (18, 3, 17), (18, 20, 6),
    (6, 1, 4), (6, 22, 19), (16, 1, 6), (16, 22, 17),
    (6, 1, 19), (6, 22, 4), (16, 1, 17), (16, 22, 6),
    (6, 4, 9), (6, 19, 14), (16, 6, 18), (16, 17, 5),
    (6, 4, 14), (6, 19, 9), (16, 6, 5), (16, 17, 18),
    (6, 5, 11), (6, 18, 12), (16, 14, 21), (16, 9, 2),
    (6, 5, 12), (6, 18, 11), (16, 14, 2), (16, 9, 21),
    (6, 6, 8), (6, 17, 15), (16, 4, 3), (16, 19, 20),
    (6, 6, 15), (6, 17, 8), (16, 4, 20), (16, 19, 3),
    (6, 9, 7), (6, 14, 16), (16, 18, 10), (16, 5, 13),
    (6, 9, 16), (6, 14, 7), (16, 18, 13), (16, 5, 10),
    (8, 1, 10), (8, 22, 13), (14, 1, 7), (14, 22, 16),
    (8, 1, 13), (8, 22, 10), (14, 1, 16), (14, 22, 7),
    (8, 2, 8), (8, 21, 15), (14, 12, 3), (14, 11, 20),
    (8, 2, 15), (8, 21, 8), (14, 12, 20), (14, 11, 3),
    (8, 7, 9), (8, 16, 14), (14, 10, 18), (14, 13, 5),
    (8, 7, 14), (8, 16, 9), (14, 10, 5), (14, 13, 18),
    (8, 10, 2), (8, 13, 21), (14, 7, 12), (14, 16, 11),
    (8, 10, 21), (8, 13, 2), (14, 7, 11), (14, 16, 12),
    (8, 11, 4), (8, 12, 19), (14, 21, 6), (14, 2, 17),
    (8, 11, 19), (8, 12, 4), (14, 21, 17), (14, 2, 6),
    (10, 1, 11), (10, 22, 12), (12, 1, 21), (12, 22, 2),
    (10, 1, 12), (10, 22, 11), (12, 1, 2), (12, 22, 21),
    (10, 2, 7), (10, 21, 16), (12, 12, 10), (12, 11, 13),
    (10, 2, 16), (10, 21, 7), (12, 12, 13), (12, 11, 10),
    (10, 3, 5), (10, 20, 18), (12, 8, 14), (12, 15, 9),
    (10, 3, 18), (10, 20, 5), (12, 8, 9), (12, 15, 14),
    (10, 8, 6), (10, 15, 17), (12, 3, 4), (12, 20, 19),
    (10, 8, 17), (10, 15, 6), (12, 3, 19), (12, 20, 4),
    (10, 11, 8), (10, 12, 15), (12, 21, 3), (12, 2, 20),
    (10, 11, 15), (10, 12, 8), (12, 21, 20), (12, 2, 3),
];

/// (n, x, z) with x^n + 1 = z^n in Z_23.
pub const P23_TYPE1_ODD: [(u64, u64, u64); 220] = [
    (1, 1, 2), (1, 21, 22), (21, 1, 12), (21, 11, 22),
    (1, 2, 3), (1, 20, 21), (21, 12, 8), (21, 15, 11),
    (1, 3, 4), (1, 19, 20), (21, 8, 6), (21, 17, 15),
    (1, 4, 5), (1, 18, 19), (21, 6, 14), (21, 9, 17),
    (1, 5, 6), (1, 17, 18), (21, 14, 4), (21, 19, 9),
    (1, 6, 7), (1, 16, 17), (21, 4, 10), (21, 13, 19),
    (1, 7, 8), (1, 15, 16), (21, 10, 3), (21, 20, 13),
    (1, 8, 9), (1, 14, 15), (21, 3, 18), (21, 5, 20),
    (1, 9, 10), (1, 13, 14), (21, 18, 7), (21, 16, 5),
    (1, 10, 11), (1, 12, 13), (21, 7, 21), (21, 2, 16),
    (1, 11, 12), (1, 11, 12), (21, 21, 2), (21, 21, 2),
    (3, 1, 16), (3, 7, 22), (19, 1, 13), (19, 10, 22),
    (3, 2, 6), (3, 17, 21), (19, 12, 4), (19, 19, 11),
    (3, 3, 19), (3, 4, 20), (19, 8, 17), (19, 6, 15),
    (3, 4, 20), (3, 3, 19), (19, 6, 15), (19, 8, 17),
    (3, 5, 10), (3, 13, 18), (19, 14, 7), (19, 16, 9),
    (3, 6, 5), (3, 18, 17), (19, 4, 14), (19, 9, 19),
    (3, 7, 22), (3, 1, 16), (19, 10, 22), (19, 1, 13),
    (3, 8, 14), (3, 9, 15), (19, 3, 5), (19, 18, 20),
    (3, 9, 15), (3, 8, 14), (19, 18, 20), (19, 3, 5),
    (3, 10, 13), (3, 10, 13), (19, 7, 16), (19, 7, 16),
    (3, 11, 7), (3, 16, 12), (19, 21, 10), (19, 13, 2),
    (5, 1, 6), (5, 17, 22), (17, 1, 4), (17, 19, 22),
    (5, 2, 20), (5, 3, 21), (17, 12, 15), (17, 8, 11),
    (5, 3, 21), (5, 2, 20), (17, 8, 11), (17, 12, 15),
    (5, 4, 3), (5, 20, 19), (17, 6, 8), (17, 15, 17),
    (5, 5, 17), (5, 6, 18), (17, 14, 19), (17, 4, 9),
    (5, 6, 18), (5, 5, 17), (17, 4, 9), (17, 14, 19),
    (5, 7, 12), (5, 11, 16), (17, 10, 2), (17, 21, 13),
    (5, 8, 7), (5, 16, 15), (17, 3, 10), (17, 13, 20),
    (5, 9, 2), (5, 21, 14), (17, 18, 12), (17, 11, 5),
    (5, 10, 5), (5, 18, 13), (17, 7, 14), (17, 9, 16),
    (5, 11, 16), (5, 7, 12), (17, 21, 13), (17, 10, 2),
    (7, 1, 3), (7, 20, 22), (15, 1, 8), (15, 15, 22),
    (7, 2, 10), (7, 13, 21), (15, 12, 7), (15, 16, 11),
    (7, 3, 6), (7, 17, 20), (15, 8, 4), (15, 19, 15),
    (7, 4, 13), (7, 10, 19), (15, 6, 16), (15, 7, 17),
    (7, 5, 16), (7, 7, 18), (15, 14, 13), (15, 10, 9),
    (7, 6, 9), (7, 14, 17), (15, 4, 18), (15, 5, 19),
    (7, 7, 18), (7, 5, 16), (15, 10, 9), (15, 14, 13),
    (7, 8, 2), (7, 21, 15), (15, 3, 12), (15, 11, 20),
    (7, 9, 7), (7, 16, 14), (15, 18, 10), (15, 13, 5),
    (7, 10, 19), (7, 4, 13), (15, 7, 17), (15, 6, 16),
    (7, 11, 4), (7, 19, 12), (15, 21, 6), (15, 17, 2),
    (9, 1, 9), (9, 14, 22), (13, 1, 18), (13, 5, 22),
    (9, 2, 17), (9, 6, 21), (13, 12, 19), (13, 4, 11),
    (9, 3, 11), (9, 12, 20), (13, 8, 21), (13, 2, 15),
    (9, 4, 15), (9, 8, 19), (13, 6, 20), (13, 3, 17),
    (9, 5, 18), (9, 5, 18), (13, 14, 9), (13, 14, 9),
    (9, 6, 21), (9, 2, 17), (13, 4, 11), (13, 12, 19),
    (9, 7, 6), (9, 17, 16), (13, 10, 4), (13, 19, 13),
    (9, 8, 19), (9, 4, 15), (13, 3, 17), (13, 6, 20),
    (9, 9, 13), (9, 10, 14), (13, 18, 16), (13, 7, 5),
    (9, 10, 14), (9, 9, 13), (13, 7, 5), (13, 18, 16),
    (9, 11, 10), (9, 13, 12), (13, 21, 7), (13, 16, 2),
];

