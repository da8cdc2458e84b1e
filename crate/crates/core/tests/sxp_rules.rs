use std::collections::BTreeMap;

use verschiebung::littlewood::{core_quotient, is_t_tileable};
use verschiebung::sxp::characters::{char_table, chi, chi_skew};
use verschiebung::sxp::*;
use verschiebung::symfunc::{skew_schur, z_lambda};
use verschiebung::universal::Family;
use verschiebung::{Basis, Partition, QPoly, SkewShape, SymFunc};

fn sign(e: usize) -> i64 {
    if e % 2 == 0 { 1 } else { -1 }
}

#[test]
fn character_tables_are_orthogonal() {
    for n in 1..=10 {
        let table = char_table(n).unwrap();
        let parts = table.partitions();
        for (j, mu) in parts.iter().enumerate() {
            for (k, rho) in parts.iter().enumerate() {
                let col: i64 = (0..parts.len()).map(|i| table.by_index(i, j) * table.by_index(i, k)).sum();
                let want = if j == k { z_lambda(mu).try_into().unwrap() } else { 0i64 };
                assert_eq!(col, want, "columns {mu} {rho}");
            }
        }
        // rows: Σ_μ χ^λ(μ)χ^ν(μ)/z_μ = δ
        for (i, _) in parts.iter().enumerate() {
            for k in 0..parts.len() {
                let mut acc = num_rational::BigRational::from_integer(0.into());
                for (j, mu) in parts.iter().enumerate() {
                    acc += num_rational::BigRational::new(
                        (table.by_index(i, j) * table.by_index(k, j)).into(),
                        z_lambda(mu),
                    );
                }
                assert_eq!(acc, num_rational::BigRational::from_integer(i64::from(i == k).into()));
            }
        }
    }
}

#[test]
fn characteristic_map_matches_power_sums() {
    for n in 1..=8 {
        for lam in Partition::all(n) {
            let sp = SymFunc::generator(Basis::S, lam.clone()).to_basis(Basis::P).unwrap();
            for mu in Partition::all(n) {
                let want = QPoly::constant(num_rational::BigRational::new(chi(&lam, &mu).unwrap().into(), z_lambda(&mu)));
                assert_eq!(sp.coeff(&mu), want);
            }
        }
    }
}

#[test]
fn skew_characters_match_skew_schur() {
    for n in 2..=6 {
        for outer in Partition::all(n) {
            for inner in outer.subpartitions() {
                let shape = SkewShape::new(outer.clone(), inner).unwrap();
                let f = skew_schur(&shape).unwrap();
                for rho in Partition::all(shape.size()) {
                    let via: i64 = f
                        .terms()
                        .iter()
                        .map(|(nu, c)| c.coeff(0).to_integer().try_into().unwrap_or(0i64) * chi(nu, &rho).unwrap())
                        .sum();
                    assert_eq!(chi_skew(&shape, &rho).unwrap(), via, "{shape} at {rho}");
                }
            }
        }
    }
}

#[test]
fn littlewood_multiplication_sweep() {
    for t in 2..=3 {
        for m in 1..=10 / t {
            for lam in Partition::all(t * m) {
                for mu in Partition::all(m) {
                    let (l, r) = littlewood_mult_sides(&lam, &mu, t).unwrap();
                    assert_eq!(l, r, "{lam} {mu} t={t}");
                    if !core_quotient(&lam, t).unwrap().core.is_empty() {
                        assert_eq!(l, 0);
                    }
                }
            }
        }
    }
}

#[test]
fn farahat_sweep() {
    for t in 2..=3 {
        for n in 0..=8 {
            for outer in Partition::all(n) {
                for inner in outer.subpartitions() {
                    let shape = SkewShape::new(outer.clone(), inner).unwrap();
                    if shape.size() % t != 0 {
                        continue;
                    }
                    for rho in Partition::all(shape.size() / t) {
                        let (l, r) = farahat_sides(&shape, &rho, t).unwrap();
                        assert_eq!(l, r, "{shape} {rho} t={t}");
                        if !is_t_tileable(&shape, t).unwrap() {
                            assert_eq!(l, 0);
                        }
                    }
                }
            }
        }
    }
}

fn as_s(map: BTreeMap<Partition, i64>) -> SymFunc {
    SymFunc::from_terms(Basis::S, map.into_iter().map(|(k, v)| (k, QPoly::int(v))))
}

#[test]
fn sxp_schur_sweep() {
    for t in 2..=3 {
        // Degree 15 (t = 3, |λ| = 5) is past the table cap; the verify sweep covers it in h.
        for n in (0..=5).filter(|n| t * n <= 14) {
            for lam in Partition::all(n) {
                let want = SymFunc::generator(Basis::S, lam.clone()).plethysm_pt(t).unwrap();
                let terms = sxp_schur(&lam, t).unwrap();
                let got = SymFunc::from_terms(Basis::S, terms.iter().map(|x| (x.nu.clone(), QPoly::int(x.value()))));
                assert_eq!(got, want, "{lam} t={t}");
                for x in &terms {
                    assert!(core_quotient(&x.nu, t).unwrap().core.is_empty());
                }
            }
        }
    }
}

#[test]
fn sxp_wildon_sweep() {
    for t in 2..=3 {
        for n in 1..=5 {
            for outer in Partition::all(n) {
                for inner in outer.subpartitions() {
                    let shape = SkewShape::new(outer.clone(), inner).unwrap();
                    if t * shape.size() > 8 {
                        continue;
                    }
                    let pleth = skew_schur(&shape).unwrap().plethysm_pt(t).unwrap();
                    for tau in Partition::up_to(2) {
                        let want = SymFunc::generator(Basis::S, tau.clone()).mul(&pleth).unwrap().to_basis(Basis::S).unwrap();
                        let got = sxp_wildon(&tau, &shape, t).unwrap();
                        for nu in got.keys() {
                            assert!(is_t_tileable(&SkewShape::new(nu.clone(), tau.clone()).unwrap(), t).unwrap());
                        }
                        assert_eq!(as_s(got), want, "tau={tau} {shape} t={t}");
                    }
                }
            }
        }
    }
}

#[test]
fn sxp_wildon_reduces_to_sxp_schur() {
    for lam in Partition::up_to(4) {
        let straight = sxp_wildon(&Partition::empty(), &SkewShape::straight(lam.clone()), 2).unwrap();
        let terms: BTreeMap<_, _> = sxp_schur(&lam, 2).unwrap().into_iter().map(|x| (x.nu.clone(), x.value())).collect();
        assert_eq!(straight, terms);
    }
}

#[test]
fn universal_coefficients_two_paths_and_relations() {
    for t in 2..=3 {
        for lam in Partition::up_to(4) {
            let mut a = BTreeMap::new();
            for f in [Family::O, Family::Sp, Family::SoPlus] {
                let x = a_coeffs_formula(&lam, f, t).unwrap();
                let y = a_coeffs_elimination(&lam, f, t).unwrap();
                assert_eq!(x, y, "{f} {lam} t={t}");
                a.insert(f, x);
            }
            assert_eq!(a[&Family::O], a[&Family::SoPlus], "o vs so+ at {lam} t={t}");
            let conj = a_coeffs_elimination(&lam.conjugate(), Family::Sp, t).unwrap();
            let dual: BTreeMap<_, _> = conj
                .into_iter()
                .map(|(nu, v)| (nu.conjugate(), sign(lam.size() * (t - 1)) * v))
                .collect();
            assert_eq!(a[&Family::O], dual, "duality at {lam} t={t}");
        }
    }
}

#[test]
fn b_coefficients_give_so_plus_expansion() {
    for t in 2..=3 {
        for lam in Partition::up_to(3) {
            let a = a_coeffs_elimination(&lam, Family::SoPlus, t).unwrap();
            let terms = sxp_universal_so(&lam, t).unwrap();
            let b: BTreeMap<_, _> = terms.iter().map(|x| (x.nu.clone(), x.value())).collect();
            assert_eq!(a, b, "{lam} t={t}");
            for nu in a.keys() {
                assert!(core_quotient(nu, t).unwrap().core.is_empty());
            }
        }
    }
}
