use super::{Block, Branch, Family, MetricSpec, BASE};

use Block::{M2, S};
use MetricSpec::{Blocks, Congruence};

pub static FAMILIES: &[Family] = &[
    // Three dimensional, rank 2.
    Family {
        id: "T1.R1",
        table: 1,
        row: 1,
        dim: 3,
        params: &["a", "b", "alpha"],
        brackets: &["[e1,e2] = a e1", "[e3,e2] = b e1"],
        conditions: &["a != 0", "alpha != 0"],
        ..BASE
    },
    Family {
        id: "T1.R2",
        table: 1,
        row: 2,
        dim: 3,
        params: &["b", "c", "d", "alpha"],
        brackets: &["[e3,e1] = -b e1 + c e2", "[e3,e2] = d e1 + b e2"],
        ..BASE
    },
    // Four dimensional, rank 2.
    Family {
        id: "T2.R1",
        table: 2,
        row: 1,
        dim: 4,
        params: &["a", "b", "c", "d", "alpha"],
        brackets: &["[e1,e2] = a e1", "[e3,e2] = b e1 + c e4", "[e4,e2] = d e1 - c e3"],
        conditions: &["a != 0", "alpha != 0"],
        ..BASE
    },
    Family {
        id: "T2.R2",
        table: 2,
        row: 2,
        dim: 4,
        params: &["a", "b", "c", "d", "alpha"],
        brackets: &[
            "[e1,e2] = a e1",
            "[e3,e2] = b e1",
            "[e4,e2] = d e1",
            "[e3,e4] = c e3 - a^-1 c b e1",
        ],
        conditions: &["alpha a c != 0"],
        ..BASE
    },
    Family {
        id: "T2.R3",
        table: 2,
        row: 3,
        dim: 4,
        params: &["a", "b", "alpha"],
        brackets: &["[e3,e4] = a e1 + b e2"],
        ..BASE
    },
    Family {
        id: "T2.R4",
        table: 2,
        row: 4,
        dim: 4,
        params: &["a", "b", "c", "x", "y", "z", "alpha"],
        brackets: &["[e3,e4] = a e1 + b e2 + c e3", "[e4,e1] = x e1 + y e2", "[e4,e2] = z e1 - x e2"],
        ..BASE
    },
    Family {
        id: "T2.R5",
        table: 2,
        row: 5,
        dim: 4,
        params: &["a", "b", "mu", "nu", "rho", "alpha"],
        brackets: &["[e3,e4] = a e1 + b e2 + 2 e4", "[e3,e1] = e1", "[e3,e2] = -e2", "[e4,e2] = e1"],
        metric: Blocks(&[S("1"), S("1"), M2("mu", "nu", "rho")]),
        conditions: &["alpha != 0", "mu > 0", "rho > 0", "mu rho > nu^2"],
        ..BASE
    },
    Family {
        id: "T2.R6",
        table: 2,
        row: 6,
        dim: 4,
        params: &["a", "b", "mu", "nu", "rho", "alpha"],
        brackets: &["[e3,e4] = a e1 + b e2 - 2 e4", "[e3,e1] = e1", "[e3,e2] = -e2", "[e4,e1] = e2"],
        metric: Blocks(&[S("1"), S("1"), M2("mu", "nu", "rho")]),
        conditions: &["alpha != 0", "mu > 0", "rho > 0", "mu rho > nu^2"],
        ..BASE
    },
    Family {
        id: "T2.R7",
        table: 2,
        row: 7,
        dim: 4,
        params: &["a", "b", "x", "mu", "nu", "rho", "alpha"],
        brackets: &[
            "[e3,e4] = a e1 + b e2 - 2 e3",
            "[e3,e1] = e1 + x e2",
            "[e3,e2] = -1/x e1 - e2",
            "[e4,e1] = x e2",
            "[e4,e2] = 1/x e1",
        ],
        metric: Blocks(&[S("1"), S("1"), M2("mu", "nu", "rho")]),
        conditions: &["alpha != 0", "mu > 0", "rho > 0", "mu rho > nu^2", "x != 0"],
        ..BASE
    },
    Family {
        id: "T2.R8",
        table: 2,
        row: 8,
        dim: 4,
        params: &["a", "b", "x", "y", "z", "alpha"],
        brackets: &["[e3,e4] = a e1 + b e2", "[e3,e2] = x e1 + y e4", "[e4,e2] = z e1 - y e3"],
        conditions: &["alpha y != 0"],
        ..BASE
    },
    // Four dimensional Kähler, rank 4.
    Family {
        id: "T3.R1",
        table: 3,
        row: 1,
        dim: 4,
        rank: 4,
        params: &["a", "b", "c", "d", "alpha", "beta"],
        brackets: &["[e1,e2] = e2"],
        bivector: "alpha e12 + beta e34",
        metric: Blocks(&[S("a"), S("b"), S("c"), S("d")]),
        conditions: &["alpha beta != 0", "a > 0", "b > 0", "c > 0", "d > 0"],
        der: &["E21", "E33 - E44", "E43", "E34"],
        ..BASE
    },
    Family {
        id: "T3.R2",
        table: 3,
        row: 2,
        dim: 4,
        rank: 4,
        params: &["a", "b", "c", "alpha", "beta"],
        brackets: &["[e1,e2] = -e3", "[e1,e3] = e2"],
        bivector: "alpha e14 + beta e23",
        metric: Blocks(&[S("a"), S("b"), S("b"), S("c")]),
        conditions: &["alpha beta != 0", "a > 0", "b > 0", "c > 0"],
        der: &["E23 - E32", "E41"],
        ..BASE
    },
    Family {
        id: "T3.R3",
        table: 3,
        row: 3,
        dim: 4,
        rank: 4,
        params: &["a", "b", "c", "d", "alpha", "beta"],
        brackets: &["[e1,e2] = e2", "[e3,e4] = e4"],
        bivector: "alpha e12 + beta e34",
        metric: Blocks(&[S("a"), S("b"), S("c"), S("d")]),
        conditions: &["alpha beta != 0", "a > 0", "b > 0", "c > 0", "d > 0"],
        der: &["E21", "E43"],
        ..BASE
    },
    Family {
        id: "T3.R4",
        table: 3,
        row: 4,
        dim: 4,
        rank: 4,
        params: &["a", "b", "c", "delta", "alpha", "beta"],
        brackets: &["[e4,e1] = e1", "[e4,e2] = -delta e3", "[e4,e3] = delta e2"],
        bivector: "alpha e14 + beta e23",
        metric: Blocks(&[S("a"), S("b"), S("b"), S("c")]),
        conditions: &["alpha beta != 0", "delta > 0", "a > 0", "b > 0", "c > 0"],
        der: &["E14", "E23 - E32"],
        ..BASE
    },
    T3R5,
    CORRECTED_T3R5,
    Family {
        id: "T3.R6",
        table: 3,
        row: 6,
        dim: 4,
        rank: 4,
        params: &["a", "alpha"],
        brackets: &["[e1,e2] = e3", "[e4,e3] = e3", "[e4,e1] = 2 e1", "[e4,e2] = -e2"],
        bivector: "alpha (e23 + e14)",
        metric: Blocks(&[S("a"), S("a"), S("2 a"), S("2 a")]),
        conditions: &["alpha != 0", "a > 0"],
        der: &["2 E14 - E32"],
        ..BASE
    },
    Family {
        id: "T3.R7",
        table: 3,
        row: 7,
        dim: 4,
        rank: 4,
        params: &["a", "alpha"],
        brackets: &["[e1,e2] = e3", "[e4,e3] = e3", "[e4,e1] = 1/2 e1 - e2", "[e4,e2] = e1 + 1/2 e2"],
        bivector: "alpha (e12 - e34)",
        metric: Blocks(&[S("a"), S("a"), S("a"), S("a")]),
        conditions: &["alpha != 0", "a > 0"],
        der: &["E34", "E12 - E21"],
        ..BASE
    },
    // Five dimensional, rank 4.
    Family {
        id: "T4.R1",
        table: 4,
        row: 1,
        dim: 5,
        rank: 4,
        params: &["x", "y", "z", "t", "a", "b", "c", "d", "e", "alpha", "beta"],
        brackets: &["[e1,e2] = e2", "[e5,e1] = x e2", "[e5,e3] = y e3 + t e4", "[e5,e4] = z e3 - y e4"],
        bivector: "alpha e12 + beta e34",
        metric: Blocks(&[S("a"), S("b"), S("c"), S("d"), S("e")]),
        conditions: &["alpha beta != 0", "a > 0", "b > 0", "c > 0", "d > 0", "e > 0"],
        ..BASE
    },
    Family {
        id: "T4.R2",
        table: 4,
        row: 2,
        dim: 5,
        rank: 4,
        params: &["x", "y", "a", "b", "c", "d", "alpha", "beta"],
        brackets: &["[e1,e2] = -e3", "[e1,e3] = e2", "[e5,e1] = y e4", "[e5,e2] = -x e3", "[e5,e3] = x e2"],
        bivector: "alpha e14 + beta e23",
        metric: Blocks(&[S("a"), S("b"), S("b"), S("c"), S("d")]),
        conditions: &["alpha beta != 0", "a > 0", "b > 0", "c > 0", "d > 0"],
        ..BASE
    },
    Family {
        id: "T4.R3",
        table: 4,
        row: 3,
        dim: 5,
        rank: 4,
        params: &["x", "y", "a", "b", "c", "d", "e", "alpha", "beta"],
        brackets: &["[e1,e2] = e2", "[e3,e4] = e4", "[e5,e1] = x e2", "[e5,e3] = y e4"],
        bivector: "alpha e12 + beta e34",
        metric: Blocks(&[S("a"), S("b"), S("c"), S("d"), S("e")]),
        conditions: &["alpha beta != 0", "a > 0", "b > 0", "c > 0", "d > 0", "e > 0"],
        ..BASE
    },
    Family {
        id: "T4.R4",
        table: 4,
        row: 4,
        dim: 5,
        rank: 4,
        params: &["x", "y", "delta", "a", "b", "c", "d", "alpha", "beta"],
        brackets: &[
            "[e4,e1] = e1",
            "[e4,e2] = -delta e3",
            "[e4,e3] = delta e2",
            "[e5,e2] = -y e3",
            "[e5,e3] = y e2",
            "[e5,e4] = x e1",
        ],
        bivector: "alpha e14 + beta e23",
        metric: Blocks(&[S("a"), S("b"), S("b"), S("c"), S("d")]),
        conditions: &["alpha beta != 0", "delta > 0", "a > 0", "b > 0", "c > 0", "d > 0"],
        ..BASE
    },
    Family {
        id: "T4.R5",
        table: 4,
        row: 5,
        dim: 5,
        rank: 4,
        params: &["x", "y", "z", "a", "b", "c", "mu", "alpha"],
        brackets: &[
            "[e1,e2] = e3",
            "[e4,e3] = e3",
            "[e4,e1] = 1/2 e1",
            "[e4,e2] = 1/2 e2",
            "[e5,e1] = x e1 + y e2",
            "[e5,e2] = y e1 - x e2",
            "[e5,e4] = z e3",
        ],
        bivector: "alpha (e12 - e34)",
        metric: Blocks(&[S("a"), S("mu b"), S("mu a"), S("b"), S("c")]),
        conditions: &["alpha != 0", "a > 0", "b > 0", "c > 0", "mu > 0"],
        ..BASE
    },
    Family {
        id: "T4.R6",
        table: 4,
        row: 6,
        dim: 5,
        rank: 4,
        params: &["x", "a", "b", "alpha"],
        brackets: &[
            "[e1,e2] = e3",
            "[e4,e3] = e3",
            "[e4,e1] = 2 e1",
            "[e4,e2] = -e2",
            "[e5,e2] = x e3",
            "[e5,e4] = -2 x e1",
        ],
        bivector: "alpha (e23 + e14)",
        metric: Blocks(&[S("a"), S("a"), S("2 a"), S("2 a"), S("b")]),
        conditions: &["alpha != 0", "a > 0", "b > 0"],
        ..BASE
    },
    Family {
        id: "T4.R7",
        table: 4,
        row: 7,
        dim: 5,
        rank: 4,
        params: &["x", "y", "a", "b", "alpha"],
        brackets: &[
            "[e1,e2] = e3",
            "[e4,e3] = e3",
            "[e4,e1] = 1/2 e1 - e2",
            "[e4,e2] = e1 + 1/2 e2",
            "[e5,e1] = -x e2",
            "[e5,e2] = x e1",
            "[e5,e4] = y e3",
        ],
        bivector: "alpha (e12 - e34)",
        metric: Blocks(&[S("a"), S("a"), S("a"), S("a"), S("b")]),
        conditions: &["alpha != 0", "a > 0", "b > 0"],
        ..BASE
    },
    // Five dimensional, rank 2, non abelian Kähler subalgebra, unimodular complement.
    Family {
        id: "T5.R1",
        table: 5,
        row: 1,
        dim: 5,
        params: &["b", "c", "d", "f", "mu", "rho", "alpha"],
        brackets: &[
            "[e1,e2] = e1",
            "[e3,e2] = b mu e1 - c e4",
            "[e4,e2] = d mu e1 + c e3",
            "[e5,e2] = f e1",
            "[e3,e4] = -f e1 + e5",
        ],
        metric: Blocks(&[S("1"), S("rho"), S("mu"), S("mu"), S("1")]),
        conditions: &["c alpha != 0", "mu > 0", "rho > 0"],
        ..BASE
    },
    Family {
        id: "T5.R2",
        table: 5,
        row: 2,
        dim: 5,
        params: &["b", "c", "d", "mu", "rho", "alpha"],
        brackets: &[
            "[e1,e2] = e1",
            "[e3,e2] = b e1",
            "[e4,e2] = c e1",
            "[e5,e2] = d mu e1",
            "[e3,e5] = b e1 - e3",
            "[e4,e5] = -c e1 + e4",
        ],
        metric: Blocks(&[S("1"), S("rho"), S("1"), S("1"), S("mu")]),
        conditions: &["alpha != 0", "mu > 0", "rho > 0"],
        ..BASE
    },
    Family {
        id: "T5.R3",
        table: 5,
        row: 3,
        dim: 5,
        params: &["b", "c", "d", "x", "mu", "rho", "alpha"],
        brackets: &[
            "[e1,e2] = e1",
            "[e3,e2] = (b + c) e1",
            "[e4,e2] = (c x + b) e1",
            "[e5,e2] = d mu e1",
            "[e3,e5] = (b + c) e1 - e3",
            "[e4,e5] = -(x c + b) e1 + e4",
        ],
        metric: Blocks(&[S("1"), S("rho"), M2("1", "1", "x"), S("mu")]),
        conditions: &["alpha != 0", "mu > 0", "rho > 0"],
        implied: &["x > 1"],
        ..BASE
    },
    Family {
        id: "T5.R4",
        table: 5,
        row: 4,
        dim: 5,
        params: &["b", "c", "d", "mu", "nu", "rho", "alpha"],
        brackets: &[
            "[e1,e2] = e1",
            "[e3,e2] = b e1",
            "[e4,e2] = c mu e1",
            "[e5,e2] = d nu e1",
            "[e3,e5] = -mu c e1 + e4",
            "[e4,e5] = b e1 - e3",
        ],
        metric: Blocks(&[S("1"), S("rho"), S("1"), S("mu"), S("nu")]),
        conditions: &["alpha != 0", "mu > 0", "nu > 0", "rho > 0"],
        ..BASE
    },
    Family {
        id: "T5.R5",
        table: 5,
        row: 5,
        dim: 5,
        params: &["b", "c", "d", "mu", "nu", "rho", "xi", "alpha"],
        brackets: &[
            "[e1,e2] = e1",
            "[e3,e2] = b mu e1",
            "[e4,e2] = c nu e1",
            "[e5,e2] = d rho e1",
            "[e3,e4] = -2 rho d e1 + 2 e5",
            "[e3,e5] = 2 nu c e1 - 2 e4",
            "[e4,e5] = 2 mu b e1 - 2 e3",
        ],
        metric: Blocks(&[S("1"), S("xi"), S("mu"), S("nu"), S("rho")]),
        conditions: &[
            "alpha != 0",
            "mu > 0",
            "nu > 0",
            "rho > 0",
            "xi > 0",
            "mu != nu",
            "mu != rho",
            "nu != rho",
        ],
        ..BASE
    },
    Family {
        id: "T5.R6",
        table: 5,
        row: 6,
        dim: 5,
        params: &["b", "c", "d", "lambda", "mu", "nu", "rho", "alpha"],
        brackets: &[
            "[e1,e2] = e1",
            "[e3,e2] = b mu e1",
            "[e4,e2] = c nu e1 - lambda e5",
            "[e5,e2] = d nu e1 + lambda e4",
            "[e3,e4] = -2 nu (lambda c + d)/(1 + lambda^2) e1 + 2 e5",
            "[e3,e5] = 2 nu (c - lambda d)/(1 + lambda^2) e1 - 2 e4",
            "[e4,e5] = 2 mu b e1 - 2 e3",
        ],
        metric: Blocks(&[S("1"), S("rho"), S("mu"), S("nu"), S("nu")]),
        conditions: &["lambda alpha != 0", "mu > 0", "nu > 0", "rho > 0"],
        ..BASE
    },
    Family {
        id: "T5.R7",
        table: 5,
        row: 7,
        dim: 5,
        params: &["b", "c", "d", "mu", "nu", "rho", "xi", "alpha"],
        brackets: &[
            "[e1,e2] = e1",
            "[e3,e2] = b mu e1",
            "[e4,e2] = c nu e1",
            "[e5,e2] = d rho e1",
            "[e3,e4] = -rho d e1 + e5",
            "[e3,e5] = nu c e1 - e4",
            "[e4,e5] = -mu b e1 + e3",
        ],
        metric: Blocks(&[S("1"), S("xi"), S("mu"), S("nu"), S("rho")]),
        conditions: &[
            "alpha != 0",
            "mu > 0",
            "nu > 0",
            "rho > 0",
            "xi > 0",
            "mu != nu",
            "mu != rho",
            "nu != rho",
        ],
        ..BASE
    },
    Family {
        id: "T5.R8",
        table: 5,
        row: 8,
        dim: 5,
        params: &["b", "c", "d", "lambda", "mu", "nu", "rho", "alpha"],
        brackets: &[
            "[e1,e2] = e1",
            "[e3,e2] = b mu e1",
            "[e4,e2] = c nu e1 - lambda e5",
            "[e5,e2] = d nu e1 + lambda e4",
            "[e3,e4] = -nu (lambda c + d)/(1 + lambda^2) e1 + e5",
            "[e3,e5] = nu (c - lambda d)/(1 + lambda^2) e1 - e4",
            "[e4,e5] = -mu b e1 + e3",
        ],
        metric: Blocks(&[S("1"), S("rho"), S("mu"), S("nu"), S("nu")]),
        conditions: &["lambda alpha != 0", "mu > 0", "nu > 0", "rho > 0"],
        ..BASE
    },
    T5R9,
    CORRECTED_T5R9,
    // Five dimensional, rank 2, non abelian Kähler subalgebra, non unimodular complement.
    Family {
        id: "T6.R1",
        table: 6,
        row: 1,
        dim: 5,
        params: &["c", "d", "f", "lambda", "mu", "rho", "alpha"],
        brackets: &[
            "[e1,e2] = e1",
            "[e3,e2] = (f + c lambda + f lambda^2) e1 - lambda e4",
            "[e4,e2] = c e1 + lambda e3",
            "[e5,e2] = d mu e1",
            "[e3,e5] = f e1 - e3",
            "[e4,e5] = (lambda f + c) e1 - e4",
        ],
        metric: Blocks(&[S("1"), S("rho"), S("1"), S("1"), S("mu")]),
        conditions: &["lambda alpha != 0", "mu > 0", "rho > 0"],
        ..BASE
    },
    Family {
        id: "T6.R2",
        table: 6,
        row: 2,
        dim: 5,
        params: &["b", "c", "d", "f", "mu", "nu", "rho", "alpha"],
        brackets: &[
            "[e1,e2] = e1",
            "[e3,e2] = b e1",
            "[e4,e2] = c mu e1",
            "[e5,e2] = d nu e1",
            "[e3,e5] = mu c e1 - e4",
            "[e4,e5] = (-f b + 2 mu c) e1 + f e3 - 2 e4",
        ],
        metric: Blocks(&[S("1"), S("rho"), S("1"), S("mu"), S("nu")]),
        conditions: &["alpha != 0", "f = 1 or f <= 0", "0 < mu < abs(f)", "rho > 0"],
        implied: &["nu > 0"],
        ..BASE
    },
    Family {
        id: "T6.R3",
        table: 6,
        row: 3,
        dim: 5,
        params: &["b", "c", "d", "mu", "nu", "rho", "alpha"],
        brackets: &[
            "[e1,e2] = e1",
            "[e3,e2] = (b + c mu) e1",
            "[e4,e2] = (c + b mu) e1",
            "[e5,e2] = d nu e1",
            "[e3,e5] = (mu b + c) e1 - e4",
            "[e4,e5] = ((2 - mu) c + (2 mu - 1) b) e1 + e3 - 2 e4",
        ],
        metric: Blocks(&[S("1"), S("rho"), M2("1", "mu", "1"), S("nu")]),
        conditions: &["alpha != 0", "mu > 0", "nu > 0", "rho > 0"],
        implied: &["mu < 1"],
        ..BASE
    },
    Family {
        id: "T6.R4",
        table: 6,
        row: 4,
        dim: 5,
        params: &["b", "c", "d", "f", "mu", "nu", "rho", "alpha"],
        brackets: &[
            "[e1,e2] = e1",
            "[e3,e2] = (b + c) e1",
            "[e4,e2] = (b + c mu) e1",
            "[e5,e2] = d nu e1",
            "[e3,e5] = (b + c mu) e1 - e4",
            "[e4,e5] = ((2 - f) b + (2 mu - f) c) e1 + f e3 - 2 e4",
        ],
        metric: Blocks(&[S("1"), S("rho"), M2("1", "1", "mu"), S("nu")]),
        conditions: &["alpha != 0", "nu > 0", "rho > 0", "c > mu > 1"],
        ..BASE
    },
    Family {
        id: "T6.R5",
        table: 6,
        row: 5,
        dim: 5,
        params: &["b", "c", "d", "nu", "rho", "alpha"],
        brackets: &[
            "[e1,e2] = e1",
            "[e3,e2] = (b + 1/2 c) e1",
            "[e4,e2] = (c + 1/2 b) e1",
            "[e5,e2] = d nu e1",
            "[e3,e5] = (c + 1/2 b) e1 - e4",
            "[e4,e5] = (b + 2 c) e1 - 2 e4",
        ],
        metric: Blocks(&[S("1"), S("rho"), M2("1", "1/2", "1"), S("nu")]),
        conditions: &["alpha != 0", "rho > 0", "nu > 0"],
        ..BASE
    },
    Family {
        id: "T6.R6",
        table: 6,
        row: 6,
        dim: 5,
        params: &["b", "c", "d", "f", "mu", "nu", "rho", "alpha"],
        derived: &[
            ("s", "sqrt(1 - f)"),
            ("x", "(((mu + 1) b + (mu - 1) c) f - 2 b)/(2 f^2 (f - 1))"),
            ("y", "(mu - 1)(c f + b)/(2 f (f - 1))"),
            ("z", "(mu - 1)(c f + b)/(2 f (f - 1))"),
            ("t", "((1 - mu) c f + ((f - 2) mu + f) b)/(2 f (1 - f))"),
        ],
        brackets: &[
            "[e1,e2] = e1",
            "[e3,e2] = x e1",
            "[e4,e2] = y e1",
            "[e5,e2] = d nu e1",
            "[e3,e5] = z e1 - e4",
            "[e4,e5] = t e1 + f e3 - 2 e4",
        ],
        metric: Congruence {
            a: [
                "(1 + s)/(-2 f s)",
                "-1/(2 s)",
                "0",
                "(1 - s)/(2 f s)",
                "1/(2 s)",
                "0",
                "0",
                "0",
                "1",
            ],
            b: &[S("1"), S("rho"), M2("1", "mu", "1"), S("nu")],
        },
        conditions: &["alpha != 0", "0 < f < 1", "0 <= mu < 1", "nu > 0", "rho > 0"],
        square_complements: &["f"],
        ..BASE
    },
    // Five dimensional, rank 2, abelian Kähler subalgebra.
    Family {
        id: "T7.R1",
        table: 7,
        row: 1,
        dim: 5,
        params: &["a", "b", "c", "d", "f", "g", "mu", "alpha"],
        brackets: &["[e3,e4] = a e1 + b e2 + e5", "[e3,e5] = c e1 + d e2", "[e4,e5] = f e1 + g e2"],
        metric: Blocks(&[S("1"), S("1"), S("mu"), S("mu"), S("1")]),
        conditions: &["alpha != 0", "mu > 0"],
        ..BASE
    },
    Family {
        id: "T7.R2",
        table: 7,
        row: 2,
        dim: 5,
        params: &["a", "b", "c", "d", "f", "g", "mu", "alpha"],
        brackets: &["[e3,e4] = a e1 + b e2", "[e3,e5] = c e1 + d e2 - e3", "[e4,e5] = f e1 + g e2 + e4"],
        metric: Blocks(&[S("1"), S("1"), S("1"), S("1"), S("mu")]),
        conditions: &["alpha != 0", "mu > 0"],
        ..BASE
    },
    Family {
        id: "T7.R2b",
        table: 7,
        row: 2,
        dim: 5,
        params: &["a", "b", "c", "d", "f", "g", "x", "mu", "alpha"],
        brackets: &["[e3,e4] = a e1 + b e2", "[e3,e5] = c e1 + d e2 - e3", "[e4,e5] = f e1 + g e2 + e4"],
        metric: Blocks(&[S("1"), S("1"), M2("1", "1", "x"), S("mu")]),
        conditions: &["alpha != 0", "mu > 0"],
        implied: &["x > 1"],
        ..BASE
    },
    Family {
        id: "T7.R3",
        table: 7,
        row: 3,
        dim: 5,
        params: &["a", "b", "c", "d", "f", "g", "mu", "nu", "alpha"],
        brackets: &["[e3,e4] = a e1 + b e2", "[e3,e5] = c e1 + d e2 + e4", "[e4,e5] = f e1 + g e2 - e3"],
        metric: Blocks(&[S("1"), S("1"), S("1"), S("mu"), S("nu")]),
        conditions: &["alpha != 0", "mu > 0", "nu > 0"],
        ..BASE
    },
    Family {
        id: "T7.R4",
        table: 7,
        row: 4,
        dim: 5,
        params: &["a", "b", "c", "d", "f", "g", "mu", "nu", "rho", "alpha"],
        brackets: &[
            "[e3,e4] = a e1 + b e2 + 2 e5",
            "[e3,e5] = c e1 + d e2 - 2 e4",
            "[e4,e5] = f e1 + g e2 - 2 e3",
        ],
        metric: Blocks(&[S("1"), S("1"), S("mu"), S("nu"), S("rho")]),
        conditions: &["alpha != 0", "mu > 0", "nu > 0", "rho > 0"],
        ..BASE
    },
    Family {
        id: "T7.R5",
        table: 7,
        row: 5,
        dim: 5,
        params: &["a", "b", "c", "d", "f", "g", "mu", "nu", "rho", "alpha"],
        brackets: &["[e3,e4] = a e1 + b e2 + e5", "[e3,e5] = c e1 + d e2 - e4", "[e4,e5] = f e1 + g e2 + e3"],
        metric: Blocks(&[S("1"), S("1"), S("mu"), S("nu"), S("rho")]),
        conditions: &["alpha != 0", "mu > 0", "nu > 0", "rho > 0"],
        ..BASE
    },
    Family {
        id: "T7.R6",
        table: 7,
        row: 6,
        dim: 5,
        params: &["c", "d", "f", "g", "mu", "alpha"],
        brackets: &["[e3,e5] = c e1 + d e2 - e3", "[e4,e5] = f e1 + g e2 - e4"],
        metric: Blocks(&[S("1"), S("1"), S("1"), S("1"), S("mu")]),
        conditions: &["alpha != 0", "mu > 0"],
        ..BASE
    },
    Family {
        id: "T7.R7",
        table: 7,
        row: 7,
        dim: 5,
        params: &["c", "d", "f", "g", "x", "alpha"],
        brackets: &["[e3,e5] = c e1 + d e2 - e4", "[e4,e5] = f e1 + g e2 + x e3 - 2 e4"],
        partial: true,
        ..BASE
    },
    // Five dimensional, rank 2, abelian Kähler subalgebra (continued).
    Family {
        id: "T8.R1",
        table: 8,
        row: 1,
        dim: 5,
        params: &["l11", "l12", "l13", "l21", "l22", "l23", "mu", "nu", "rho", "alpha"],
        brackets: &[
            "[e3,e1] = -e2",
            "[e3,e2] = e1",
            "[e4,e1] = e2",
            "[e4,e2] = e1",
            "[e5,e1] = e1",
            "[e5,e2] = -e2",
            "[e3,e4] = 2 e5 + (l22 - l21 - 2 l13) e1 - (l12 + l11 + 2 l23) e2",
            "[e3,e5] = -2 e4 + (l23 - l11 + 2 l12) e1 - (l13 - l21 - 2 l22) e2",
            "[e4,e5] = -2 e3 + (l23 - l12 + 2 l11) e1 + (l13 + l22 + 2 l21) e2",
        ],
        metric: Blocks(&[S("1"), S("1"), S("mu"), S("nu"), S("rho")]),
        conditions: &["alpha != 0", "mu > 0", "nu > 0", "rho > 0"],
        ..BASE
    },
    Family {
        id: "T8.R2",
        table: 8,
        row: 2,
        dim: 5,
        params: &["a", "b", "c", "r", "s", "t", "u", "v", "x", "y", "z", "alpha"],
        brackets: &[
            "[e4,e2] = u e1",
            "[e5,e1] = -a/2 e1",
            "[e5,e2] = v e1 + a/2 e2",
            "[e3,e4] = x e1 + y e2",
            "[e3,e5] = b e3 + z e1 + t e2",
            "[e4,e5] = c e3 + a e4 + r e1 + s e2",
        ],
        conditions: &[
            "alpha != 0",
            "a != 0",
            "b != 0",
            "(3 a + 2 b) y = 0",
            "(a + 2 b) x - 2 t u + 2 y v = 0",
        ],
        branches: &[
            Branch { preset: &[("y", "0")], solve: &["x"] },
            Branch { preset: &[("b", "-3 a/2")], solve: &["x"] },
        ],
        ..BASE
    },
    Family {
        id: "T8.R3",
        table: 8,
        row: 3,
        dim: 5,
        params: &["a", "r", "s", "t", "u", "v", "x", "z", "mu", "alpha"],
        brackets: &[
            "[e4,e2] = u e1",
            "[e5,e1] = -a/2 e1",
            "[e5,e2] = v e1 + a/2 e2",
            "[e3,e4] = x e1",
            "[e3,e5] = z e1 + t e2",
            "[e4,e5] = a e4 + r e1 + s e2",
        ],
        metric: Blocks(&[S("1"), S("1"), M2("1", "mu", "1"), S("1")]),
        conditions: &["alpha != 0", "a != 0", "a x - 2 t u = 0"],
        implied: &["mu^2 < 1"],
        branches: &[Branch { preset: &[], solve: &["x"] }],
        ..BASE
    },
    Family {
        id: "T8.R4",
        table: 8,
        row: 4,
        dim: 5,
        params: &["a", "b", "c", "r", "s", "t", "u", "v", "x", "y", "z", "alpha"],
        brackets: &[
            "[e4,e1] = u e2",
            "[e5,e1] = a/2 e1 + v e2",
            "[e5,e2] = -a/2 e2",
            "[e3,e4] = x e1 + y e2",
            "[e3,e5] = b e3 + z e1 + t e2",
            "[e4,e5] = c e3 + a e4 + r e1 + s e2",
        ],
        conditions: &[
            "alpha != 0",
            "a != 0",
            "b != 0",
            "(3 a + 2 b) x = 0",
            "(a + 2 b) y - 2 z u + 2 x v = 0",
        ],
        branches: &[
            Branch { preset: &[("x", "0")], solve: &["y"] },
            Branch { preset: &[("b", "-3 a/2")], solve: &["y"] },
        ],
        ..BASE
    },
    Family {
        id: "T8.R5",
        table: 8,
        row: 5,
        dim: 5,
        params: &["a", "r", "s", "t", "u", "v", "y", "z", "mu", "alpha"],
        brackets: &[
            "[e4,e1] = u e2",
            "[e5,e1] = a/2 e1 + v e2",
            "[e5,e2] = -a/2 e2",
            "[e3,e4] = y e2",
            "[e3,e5] = z e1 + t e2",
            "[e4,e5] = a e4 + r e1 + s e2",
        ],
        metric: Blocks(&[S("1"), S("1"), M2("1", "mu", "1"), S("1")]),
        conditions: &["alpha != 0", "a != 0", "a y - 2 z u = 0"],
        implied: &["mu^2 < 1"],
        branches: &[Branch { preset: &[], solve: &["y"] }],
        ..BASE
    },
    Family {
        id: "T8.R6",
        table: 8,
        row: 6,
        dim: 5,
        params: &["a", "b", "c", "p", "r", "s", "t", "u", "v", "x", "y", "z", "alpha"],
        brackets: &[
            "[e4,e1] = u e1 + u p e2",
            "[e4,e2] = -u/p e1 - u e2",
            "[e5,e1] = v e1 + (2 v - a) p/2 e2",
            "[e5,e2] = -(2 v + a)/(2 p) e1 - v e2",
            "[e3,e4] = x e1 + y e2",
            "[e3,e5] = b e3 + z e1 + t e2",
            "[e4,e5] = c e3 + a e4 + r e1 + s e2",
        ],
        conditions: &[
            "alpha != 0",
            "a != 0",
            "b != 0",
            "((2 a + 2 b + 2 v) x - 2 z u) p - a y + 2 t u - 2 y v = 0",
            "(2 x v - a x - 2 z u) p + (2 a + 2 b - 2 v) y + 2 t u = 0",
        ],
        implied: &["p != 0"],
        branches: &[Branch { preset: &[], solve: &["x", "y"] }],
        ..BASE
    },
    Family {
        id: "T8.R7",
        table: 8,
        row: 7,
        dim: 5,
        params: &["a", "b", "p", "r", "s", "t", "u", "v", "x", "y", "z", "mu", "alpha"],
        brackets: &[
            "[e4,e1] = u e1 + u p e2",
            "[e4,e2] = -u/p e1 - u e2",
            "[e5,e1] = v e1 + (2 v - a) p/2 e2",
            "[e5,e2] = -(2 v + a)/(2 p) e1 - v e2",
            "[e3,e4] = x e1 + y e2",
            "[e3,e5] = z e1 + t e2",
            "[e4,e5] = a e4 + r e1 + s e2",
        ],
        metric: Blocks(&[S("1"), S("1"), M2("1", "mu", "1"), S("1")]),
        conditions: &[
            "alpha != 0",
            "a != 0",
            "b != 0",
            "((2 a + 2 v) x - 2 z u) p - a y + 2 t u - 2 y v = 0",
            "(2 x v - a x - 2 z u) p + (2 a - 2 v) y + 2 t u = 0",
        ],
        implied: &["p != 0", "mu^2 < 1"],
        branches: &[Branch { preset: &[], solve: &["x", "y"] }],
        ..BASE
    },
    Family {
        id: "T8.R8",
        table: 8,
        row: 8,
        dim: 5,
        params: &["a", "b", "c", "d", "r", "s", "t", "u", "v", "w", "x", "y", "z", "alpha"],
        brackets: &[
            "[e5,e1] = u e1 + v e2",
            "[e5,e2] = w e1 - u e2",
            "[e3,e4] = x e1 + y e2",
            "[e3,e5] = a e3 + b e4 + z e1 + t e2",
            "[e4,e5] = c e3 + d e4 + r e1 + s e2",
        ],
        conditions: &["alpha != 0", "(a + d + u) x + y w = 0", "x v + (a + d - u) y = 0"],
        branches: &[Branch { preset: &[], solve: &["w", "v"] }],
        ..BASE
    },
    Family {
        id: "T8.R9",
        table: 8,
        row: 9,
        dim: 5,
        params: &["a", "b", "c", "r", "s", "t", "u", "v", "w", "x", "y", "z", "alpha"],
        brackets: &[
            "[e5,e1] = u e1 + v e2",
            "[e5,e2] = w e1 - u e2",
            "[e3,e4] = x e1 + y e2 + a e4",
            "[e3,e5] = b e4 + z e1 + t e2",
            "[e4,e5] = c e4 + r e1 + s e2",
        ],
        conditions: &["alpha != 0", "a != 0", "(c + u) x - a r + y w = 0", "(c - u) y - a s + x v = 0"],
        branches: &[Branch { preset: &[], solve: &["r", "s"] }],
        ..BASE
    },
    // Five dimensional, rank 2, abelian Kähler subalgebra (continued).
    T9R1,
    CORRECTED_T9R1,
    T9R2,
    CORRECTED_T9R2,
    T9R3,
    CORRECTED_T9R3,
];

const T3R5: Family = Family {
    id: "T3.R5",
    table: 3,
    row: 5,
    dim: 4,
    rank: 4,
    params: &["a", "b", "mu", "alpha"],
    brackets: &["[e1,e2] = e3", "[e4,e3] = e3", "[e4,e1] = 1/2 e1", "[e4,e2] = 1/2 e2"],
    bivector: "alpha (e12 - e34)",
    metric: Blocks(&[S("a"), S("mu b"), S("mu a"), S("b")]),
    conditions: &["alpha != 0", "a > 0", "b > 0", "mu > 0"],
    der: &["E34", "E22 - E11", "E12 + E21"],
    ..BASE
};

const T5R9: Family = Family {
    id: "T5.R9",
    table: 5,
    row: 9,
    dim: 5,
    params: &["b", "c", "d", "u", "v", "w", "mu", "rho", "alpha"],
    derived: &[
        ("x", "-(mu (b u w - c u v + d u^2 + b v + c w + d))/(1 + u^2 + v^2 + w^2)"),
        ("y", "mu (-b v w + c v^2 - d u w + b u - d w + c)/(1 + u^2 + v^2 + w^2)"),
        ("z", "-(mu (b w^2 - c v w + d u w - c u - d v + b))/(1 + u^2 + v^2 + w^2)"),
    ],
    brackets: &[
        "[e1,e2] = e1",
        "[e3,e2] = b mu e1 - u e4 - v e5",
        "[e4,e2] = c mu e1 + u e3 - w e5",
        "[e5,e2] = d mu e1 + v e3 + w e4",
        "[e3,e4] = x e1 + e5",
        "[e3,e5] = y e1 - e4",
        "[e4,e5] = z e1 + e3",
    ],
    metric: Blocks(&[S("1"), S("rho"), S("mu"), S("mu"), S("mu")]),
    conditions: &["alpha != 0", "mu > 0", "rho > 0"],
    ..BASE
};

const T9R1: Family = Family {
    id: "T9.R1",
    table: 9,
    row: 1,
    dim: 5,
    params: &["a", "p", "q", "x", "y", "z", "alpha"],
    brackets: &[
        "[e3,e2] = x e1 - a e4",
        "[e4,e2] = y e1 + a e3",
        "[e5,e2] = z e1",
        "[e3,e5] = p e3 + q e4 + a^-1 (-q x + p y) e1",
        "[e3,e5] = -q e3 + p e4 - a^-1 (p x + q y) e1",
    ],
    conditions: &["alpha != 0", "a != 0"],
    ..BASE
};

const T9R2: Family = Family {
    id: "T9.R2",
    table: 9,
    row: 2,
    dim: 5,
    params: &["a", "b", "q", "x", "y", "z", "alpha"],
    brackets: &[
        "[e3,e2] = x e1 - a e4",
        "[e4,e2] = y e1 + a e3",
        "[e5,e2] = z e1",
        "[e3,e4] = b e1",
        "[e3,e5] = q e4 - a^-1 q x e1",
        "[e3,e5] = -q e3 - a^-1 q y e1",
    ],
    conditions: &["alpha != 0", "a != 0", "z != 0"],
    ..BASE
};

const T9R3: Family = Family {
    id: "T9.R3",
    table: 9,
    row: 3,
    dim: 5,
    params: &["a", "b", "c", "q", "x", "y", "alpha"],
    brackets: &[
        "[e3,e2] = x e1 - a e4",
        "[e4,e2] = y e1 + a e3",
        "[e3,e4] = b e1 + c e2",
        "[e3,e5] = q e4 - a^-1 q x e1",
        "[e3,e5] = -q e3 - a^-1 q y e1",
    ],
    conditions: &["alpha != 0", "a != 0"],
    ..BASE
};

const CORRECTED_T5R9: Family = Family {
    corrected: Some("in y, the term -d u w becomes -d u v"),
    derived: &[
        ("x", "-(mu (b u w - c u v + d u^2 + b v + c w + d))/(1 + u^2 + v^2 + w^2)"),
        ("y", "mu (-b v w + c v^2 - d u v + b u - d w + c)/(1 + u^2 + v^2 + w^2)"),
        ("z", "-(mu (b w^2 - c v w + d u w - c u - d v + b))/(1 + u^2 + v^2 + w^2)"),
    ],
    ..T5R9
};

const CORRECTED_T9R1: Family = Family {
    corrected: Some("the second bracket [e3,e5] is [e4,e5]"),
    brackets: &[
        "[e3,e2] = x e1 - a e4",
        "[e4,e2] = y e1 + a e3",
        "[e5,e2] = z e1",
        "[e3,e5] = p e3 + q e4 + a^-1 (-q x + p y) e1",
        "[e4,e5] = -q e3 + p e4 - a^-1 (p x + q y) e1",
    ],
    ..T9R1
};

const CORRECTED_T9R2: Family = Family {
    corrected: Some("the second bracket [e3,e5] is [e4,e5]"),
    brackets: &[
        "[e3,e2] = x e1 - a e4",
        "[e4,e2] = y e1 + a e3",
        "[e5,e2] = z e1",
        "[e3,e4] = b e1",
        "[e3,e5] = q e4 - a^-1 q x e1",
        "[e4,e5] = -q e3 - a^-1 q y e1",
    ],
    ..T9R2
};

const CORRECTED_T9R3: Family = Family {
    corrected: Some("the second bracket [e3,e5] is [e4,e5]"),
    brackets: &[
        "[e3,e2] = x e1 - a e4",
        "[e4,e2] = y e1 + a e3",
        "[e3,e4] = b e1 + c e2",
        "[e3,e5] = q e4 - a^-1 q x e1",
        "[e4,e5] = -q e3 - a^-1 q y e1",
    ],
    ..T9R3
};

const CORRECTED_T3R5: Family = Family {
    corrected: Some("the derivation E12 - E21 is added to the printed span"),
    der: &["E34", "E22 - E11", "E12 + E21", "E12 - E21"],
    ..T3R5
};
