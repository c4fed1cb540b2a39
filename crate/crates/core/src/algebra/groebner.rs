//! Buchberger's algorithm specialized to pure-difference binomials.
//!
//! The S-polynomial of two pure differences `u1 - v1`, `u2 - v2` with
//! leading terms `u1`, `u2` and `L = lcm(u1, u2)` is again a pure
//! difference, `(L/u2) v2 - (L/u1) v1`, and rewriting a monomial by
//! `u -> v` keeps everything monic. Membership therefore never needs
//! field coefficients.

use super::{Binomial, Monomial, TermOrder};

/// Reduce a monomial to its normal form: rewrite by the first basis
/// element whose leading term divides it until none does. Each rewrite
/// strictly decreases the monomial in the order, so this terminates.
fn reduce_monomial(m: &Monomial, basis: &[Binomial], _ord: &TermOrder) -> Monomial {
    let mut current = m.clone();
    'outer: loop {
        for b in basis {
            if b.leading().divides(&current) {
                current = b.leading().div_into(&current).mul(b.trailing());
                continue 'outer;
            }
        }
        return current;
    }
}

/// Full reduction of a binomial modulo a basis. `None` means the binomial
/// reduces to zero; for a Gröbner basis that is exactly ideal membership.
pub fn normal_form(f: &Binomial, basis: &[Binomial], ord: &TermOrder) -> Option<Binomial> {
    let a = reduce_monomial(f.leading(), basis, ord);
    let b = reduce_monomial(f.trailing(), basis, ord);
    Binomial::new(a, b, ord)
}

fn s_polynomial(f: &Binomial, g: &Binomial, ord: &TermOrder) -> Option<Binomial> {
    let l = f.leading().lcm(g.leading());
    let a = f.leading().div_into(&l).mul(f.trailing());
    let b = g.leading().div_into(&l).mul(g.trailing());
    Binomial::new(b, a, ord)
}

/// Compute a reduced Gröbner basis of the ideal generated by
/// pure-difference binomials.
pub fn buchberger(gens: &[Binomial], ord: &TermOrder) -> Vec<Binomial> {
    let mut basis: Vec<Binomial> = Vec::new();
    for g in gens {
        if !basis.contains(g) {
            basis.push(g.clone());
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        // Buchberger's first criterion: coprime leading terms reduce to 0.
        if basis[i].leading().is_coprime_with(basis[j].leading()) {
            continue;
        }
        let Some(s) = s_polynomial(&basis[i], &basis[j], ord) else {
            continue;
        };
        if let Some(r) = normal_form(&s, &basis, ord) {
            let k = basis.len();
            for idx in 0..k {
                pairs.push((idx, k));
            }
            basis.push(r);
        }
    }
    interreduce(basis, ord)
}

/// Minimize and reduce: drop elements whose leading term another element
/// divides, then reduce every element modulo the rest until stable.
fn interreduce(mut basis: Vec<Binomial>, ord: &TermOrder) -> Vec<Binomial> {
    loop {
        let mut changed = false;
        let mut next: Vec<Binomial> = Vec::new();
        for i in 0..basis.len() {
            let rest: Vec<Binomial> = basis
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, b)| b.clone())
                .collect();
            match normal_form(&basis[i], &rest, ord) {
                None => {
                    changed = true;
                }
                Some(r) => {
                    if r != basis[i] {
                        changed = true;
                    }
                    if !next.contains(&r) {
                        next.push(r);
                    } else {
                        changed = true;
                    }
                }
            }
        }
        basis = next;
        if !changed {
            basis.sort();
            return basis;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{inner_2_minors, Monomial, VariableId};
    use crate::fixtures;
    use crate::grid::pt;

    fn x(x_: i64, y_: i64) -> Monomial {
        Monomial::var(VariableId::Vertex(pt(x_, y_)))
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let ord = TermOrder::degrevlex();
        let gens = inner_2_minors(&fixtures::f1());
        assert_eq!(buchberger(&gens, &ord), gens);
    }

    #[test]
    fn coprime_leading_terms_add_nothing() {
        let ord = TermOrder::degrevlex();
        let f = Binomial::new(x(0, 0).mul(&x(1, 1)), x(1, 0).mul(&x(0, 1)), &ord).unwrap();
        let g = Binomial::new(x(5, 5).mul(&x(6, 6)), x(6, 5).mul(&x(5, 6)), &ord).unwrap();
        let basis = buchberger(&[f.clone(), g.clone()], &ord);
        let mut expected = vec![f, g];
        expected.sort();
        assert_eq!(basis, expected);
    }

    #[test]
    fn generator_reduces_to_zero_against_its_basis() {
        let ord = TermOrder::degrevlex();
        let gens = inner_2_minors(&fixtures::f2());
        let basis = buchberger(&gens, &ord);
        for g in &gens {
            assert_eq!(normal_form(g, &basis, &ord), None, "{g}");
        }
    }

    #[test]
    fn hand_checked_s_pair_reduction() {
        // Two dominoes of the 2x2 square overlapping in the left column:
        // f = x00 x12 - x10 x02 (vertical domino on the left),
        // g = x00 x11 - x10 x01 (lower-left cell). Their S-polynomial
        // rewrites to a pure difference supported on the remaining
        // corners; reducing it against the full minor set gives zero.
        let ord = TermOrder::degrevlex();
        let f = Binomial::new(x(0, 0).mul(&x(1, 2)), x(1, 0).mul(&x(0, 2)), &ord).unwrap();
        let g = Binomial::new(x(0, 0).mul(&x(1, 1)), x(1, 0).mul(&x(0, 1)), &ord).unwrap();
        let s = s_polynomial(&f, &g, &ord);
        // Shared factor of the leads depends on orientation; recompute by
        // the definition to stay independent of the order's tie-breaks.
        let l = f.leading().lcm(g.leading());
        let expected = Binomial::new(
            f.leading().div_into(&l).mul(f.trailing()),
            g.leading().div_into(&l).mul(g.trailing()),
            &ord,
        );
        assert_eq!(s.map(|b| b.to_string()), expected.map(|b| b.to_string()));

        let gens = inner_2_minors(&fixtures::f2());
        let basis = buchberger(&gens, &ord);
        if let Some(sp) = s_polynomial(&f, &g, &ord) {
            assert_eq!(normal_form(&sp, &basis, &ord), None);
        }
    }

    #[test]
    fn perimeter_binomial_reduces_to_zero_in_square_ideal() {
        let ord = TermOrder::degrevlex();
        let gens = inner_2_minors(&fixtures::f2());
        let basis = buchberger(&gens, &ord);
        let perimeter =
            Binomial::new(x(0, 0).mul(&x(2, 2)), x(2, 0).mul(&x(0, 2)), &ord).unwrap();
        assert_eq!(normal_form(&perimeter, &basis, &ord), None);
    }

    #[test]
    fn all_s_pairs_of_final_basis_reduce_to_zero() {
        let ord = TermOrder::degrevlex();
        for p in [fixtures::f2(), fixtures::f3(), fixtures::f6()] {
            let basis = buchberger(&inner_2_minors(&p), &ord);
            for i in 0..basis.len() {
                for j in (i + 1)..basis.len() {
                    if let Some(s) = s_polynomial(&basis[i], &basis[j], &ord) {
                        assert_eq!(normal_form(&s, &basis, &ord), None);
                    }
                }
            }
        }
    }

    #[test]
    fn normal_form_is_idempotent() {
        let ord = TermOrder::degrevlex();
        let gens = inner_2_minors(&fixtures::f3());
        let basis = buchberger(&gens, &ord);
        let f = Binomial::new(x(0, 0).mul(&x(2, 1)), x(2, 0).mul(&x(0, 1)), &ord).unwrap();
        let once = normal_form(&f, &basis, &ord);
        match once {
            None => {}
            Some(r) => assert_eq!(normal_form(&r, &basis, &ord), Some(r.clone())),
        }
    }

    #[test]
    fn degenerate_difference_is_zero() {
        let ord = TermOrder::degrevlex();
        assert_eq!(Binomial::new(x(0, 0), x(0, 0), &ord), None);
    }
}
