//! The Seifert form of the Bennequin surface is checked against the Conway
//! polynomial obtained independently from the skein recursion:
//! `det(x⁻¹V − xVᵀ) = ∇(x − x⁻¹)` whenever the surface is connected.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use linkbound::braid::BraidWord;
use linkbound::diagram::{seifert_matrix_of_closure, signature};
use linkbound::homfly::homfly_braid;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut d = BigRational::one();
    for i in 0..n {
        let Some(p) = (i..n).find(|&r| !a[r][i].is_zero()) else { return BigRational::zero() };
        if p != i {
            a.swap(p, i);
            d = -d;
        }
        d *= a[i][i].clone();
        for r in i + 1..n {
            let f = a[r][i].clone() / a[i][i].clone();
            for c in i..n {
                let t = f.clone() * a[i][c].clone();
                a[r][c] -= t;
            }
        }
    }
    d
}

fn conway_at(b: &BraidWord, z: &BigRational) -> BigRational {
    let p = homfly_braid(b).unwrap();
    let mut total = BigRational::zero();
    for (e, c) in p.at_v_one() {
        total += rat(c, 1) * z.pow(e);
    }
    total
}

fn seifert_side(b: &BraidWord, x: &BigRational) -> BigRational {
    let v = seifert_matrix_of_closure(b).matrix;
    let m = v.len();
    let xi = x.recip();
    let a = (0..m)
        .map(|i| (0..m).map(|j| xi.clone() * rat(v[i][j], 1) - x.clone() * rat(v[j][i], 1)).collect())
        .collect();
    det(a)
}

fn connected_braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(|n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(g, s)| if s { g } else { -g });
        prop::collection::vec(letter, n - 1..=9).prop_filter_map("every column used", move |l| {
            let b = BraidWord::new(n, l).ok()?;
            b.generator_counts()[1..].iter().all(|&c| c > 0).then_some(b)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn seifert_form_gives_conway(b in connected_braid()) {
        let x = rat(2, 1);
        let z = x.clone() - x.recip();
        prop_assert_eq!(seifert_side(&b, &x), conway_at(&b, &z));
    }

    #[test]
    fn mirror_negates_signature(b in connected_braid()) {
        let s = signature(&seifert_matrix_of_closure(&b));
        let m = signature(&seifert_matrix_of_closure(&b.mirror()));
        prop_assert_eq!(s.sigma, -m.sigma);
        prop_assert_eq!(s.nullity, m.nullity);
    }
}

#[test]
fn known_signatures() {
    let cases: [(usize, &[i32], i64); 5] = [
        (2, &[1, 1, 1], -2),
        (2, &[1, 1, 1, 1, 1], -4),
        (3, &[-1, 2, -1, 2], 0),
        (3, &[1, 2, 1, 2, 1, 2], -4),
        (2, &[1, 1], -1),
    ];
    for (n, l, sigma) in cases {
        let b = BraidWord::new(n, l.to_vec()).unwrap();
        assert_eq!(signature(&seifert_matrix_of_closure(&b)).sigma, sigma, "{l:?}");
    }
}
