//! Rings given by explicit tables.

use crate::ring::FiniteRing;

/// `F2[x,y]/(x,y)^2`: basis `1, x, y` over `F2` with `x^2 = xy = y^2 = 0`.
/// Element `c0 + c1 x + c2 y` has index `c0 + 2 c1 + 4 c2`.
pub fn f2xy_mod_square() -> FiniteRing {
    let bits = |i: usize| (i & 1, (i >> 1) & 1, (i >> 2) & 1);
    let enc = |c0: usize, c1: usize, c2: usize| (c0 % 2) | ((c1 % 2) << 1) | ((c2 % 2) << 2);
    let mut add = Vec::with_capacity(64);
    let mut mul = Vec::with_capacity(64);
    for a in 0..8 {
        for b in 0..8 {
            add.push((a ^ b) as u32);
            let (a0, a1, a2) = bits(a);
            let (b0, b1, b2) = bits(b);
            mul.push(enc(a0 * b0, a0 * b1 + a1 * b0, a0 * b2 + a2 * b0) as u32);
        }
    }
    let names = ["0", "1", "x", "1+x", "y", "1+y", "x+y", "1+x+y"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteRing::from_flat_tables("table(@f2xy)".into(), 8, add, mul, Some(names))
        .expect("catalog ring satisfies the axioms")
}

/// Looks up a bundled ring by its catalog name.
pub fn by_name(name: &str) -> Option<FiniteRing> {
    match name {
        "f2xy" => Some(f2xy_mod_square()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2xy_is_local_with_four_units() {
        let r = f2xy_mod_square();
        assert_eq!(r.order(), 8);
        assert!(r.validate().is_empty());
        assert_eq!(r.units().len(), 4);
        let (x, y) = (r.find("x").unwrap(), r.find("y").unwrap());
        assert_eq!(r.mul(x, y), r.zero());
        assert_eq!(r.mul(x, x), r.zero());
        assert_eq!(r.add(x, y), r.find("x+y").unwrap());
    }
}
