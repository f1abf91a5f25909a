#![allow(dead_code)]

/// Golden ratio to ten digits, as used for the reference tables.
pub const GOLDEN: f64 = 1.6180339887;

/// Reference `(n, μ, r)` of the golden-ratio twisted columns, parity −1.
pub const MAGNETIC_TABLE: [(u32, f64, f64); 6] = [
    (1, 1.90951, 0.127237),
    (2, 2.03576, 0.247275),
    (3, 2.27181, 0.353348),
    (4, 2.65802, 0.439982),
    (5, 3.25281, 0.504218),
    (6, 4.13094, 0.546398),
];

/// Reference `(n, μ, r)` of the golden-ratio twisted columns, parity +1.
pub const ELECTRIC_TABLE: [(u32, f64, f64); 6] = [
    (1, 0.770862, 0.289255),
    (2, 0.849115, 0.533287),
    (3, 0.884453, 0.749346),
    (4, 0.902344, 0.939799),
    (5, 0.912336, 1.1074),
    (6, 0.918378, 1.25549),
];
