//! Generators of the worked examples, written out per parameter `a`.
//!
//! All three families live in `k[x0..x4]`: the curves `C(1,2,3,3a+i)` for
//! `i = 0, 1, 2`.

/// `C(1,2,3,3a)`: `g1..g4`.
pub fn ex1(a: u32) -> Vec<String> {
    vec![
        "x2^2 - x1*x3".into(),
        "x1*x2 - x0*x3".into(),
        format!("x3^{a} - x0^{}*x4", a - 1),
        "x1^2 - x0*x2".into(),
    ]
}

/// `C(1,2,3,3a+1)`: `g1..g6`.
pub fn ex2(a: u32) -> Vec<String> {
    vec![
        "x2^2 - x1*x3".into(),
        "x1*x2 - x0*x3".into(),
        "x1^2 - x0*x2".into(),
        format!("x3^{} - x0^{}*x2*x4", a + 1, a - 1),
        format!("x2*x3^{a} - x0^{}*x1*x4", a - 1),
        format!("x1*x3^{a} - x0^{a}*x4"),
    ]
}

/// `C(1,2,3,3a+2)`: `g1..g5`. `g1` is not homogeneous; its two components
/// are `g5` and `x2^2 - x1*x3`.
pub fn ex3(a: u32) -> Vec<String> {
    vec![
        format!("x2*x3^{a} - x0^{a}*x4 + x2^2 - x1*x3"),
        "x1*x2 - x0*x3".into(),
        "x1^2 - x0*x2".into(),
        format!("x3^{} - x0^{}*x1*x4", a + 1, a - 1),
        format!("x2*x3^{a} - x0^{a}*x4"),
    ]
}

/// The reordered generating set `(g1, g2, g3+g4, g6, g3, g5)` of the ex2 ideal,
/// whose first four elements form the minimal reduction.
pub fn ex2_reduction_order(a: u32) -> Vec<String> {
    let g = ex2(a);
    vec![
        g[0].clone(),
        g[1].clone(),
        format!("{} + {}", g[2], g[3]),
        g[5].clone(),
        g[2].clone(),
        g[4].clone(),
    ]
}

/// Leading monomials of the product of the ex2 reduction with the ideal,
/// under grevlex.
pub fn ex2_product_initial(a: u32) -> Vec<String> {
    let b = a + 1;
    let c = 2 * a + 1;
    vec![
        "x2^4".into(),
        "x1*x2^3".into(),
        "x0*x2^3".into(),
        "x1^2*x2^2".into(),
        "x1^3*x2".into(),
        "x1^4".into(),
        format!("x2^2*x3^{b}"),
        format!("x1*x2*x3^{b}"),
        format!("x1^2*x3^{b}"),
        format!("x2^3*x3^{a}"),
        format!("x1*x2^2*x3^{a}"),
        format!("x1^2*x2*x3^{a}"),
        format!("x1^3*x3^{a}"),
        format!("x0^2*x2^2*x3^{a}"),
        format!("x3^{}", 2 * a + 2),
        format!("x2*x3^{c}"),
        format!("x1*x3^{c}"),
        format!("x0*x3^{c}"),
        format!("x0*x2*x3^{}", 2 * a),
    ]
}

/// Initial ideal of `I + (x0, x4)` for the three families (`i = 0, 1, 2`).
pub fn sop_initial(a: u32, i: u32) -> Vec<String> {
    let mut m: Vec<String> = vec!["x0".into(), "x1^2".into(), "x1*x2".into(), "x2^2".into(), "x4".into()];
    match i {
        0 => m.push(format!("x3^{a}")),
        1 => {
            m.push(format!("x3^{}", a + 1));
            m.push(format!("x1*x3^{a}"));
            m.push(format!("x2*x3^{a}"));
        }
        _ => {
            m.push(format!("x2*x3^{a}"));
            m.push(format!("x3^{}", a + 1));
        }
    }
    m
}

/// Degree triples of curves in `P^3` exercised by the `p3` suite.
pub const P3_TRIPLES: [[u32; 3]; 4] = [[1, 2, 3], [1, 3, 4], [2, 3, 5], [1, 2, 5]];
