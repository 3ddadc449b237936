use std::f64::consts::PI;

use proptest::prelude::*;

use contextuality_lab::chsh::{gamma_vector, scan_range, CoplanarConfig, QM_BOUND};
use contextuality_lab::ga::{geometric_product, BladeMask, DynMultivector, Multivector};
use contextuality_lab::hv_models::{
    builtin_constraints, evaluate_vector_model, non_contextuality_audit, Axis, ObservableProduct, PauliSymbol,
    VectorAssignment,
};
use contextuality_lab::identity_model::{bell_ghz_column, orientation_reading, IdentityMap};
use contextuality_lab::multi_system::TensorMultivector;
use contextuality_lab::scalar::rat;
use contextuality_lab::{Mode, Rational};

type Mv = Multivector<Rational>;
type T = TensorMultivector<Rational>;

fn mv() -> impl Strategy<Value = Mv> {
    prop::array::uniform8(-6i64..=6).prop_map(|c| Mv::from_coeffs(c.map(rat)))
}

/// Short sum of coefficient-times-blade terms across `n` systems.
fn tensor(n: usize) -> impl Strategy<Value = T> {
    let term = (-4i64..=4, prop::collection::vec(0usize..8, n));
    prop::collection::vec(term, 1..5).prop_map(move |terms| {
        terms.into_iter().fold(T::zero(n).unwrap(), |acc, (k, masks)| {
            let t = masks.iter().enumerate().fold(T::scalar(n, rat(k)).unwrap(), |t, (slot, &m)| {
                let blade = Mv::blade(BladeMask::new(m).unwrap(), rat(1));
                &t * &T::embed(slot + 1, &blade, n).unwrap()
            });
            &acc + &t
        })
    })
}

fn generator(sign: i8, system: usize, axis: usize, n: usize) -> T {
    T::signed_generator(sign, system, axis, n).unwrap()
}

fn word(n: usize, factors: &[(i8, usize, usize)]) -> T {
    factors.iter().fold(T::one(n).unwrap(), |acc, &(s, sys, a)| &acc * &generator(s, sys, a, n))
}

fn sign_bit(bits: u32, slot: usize) -> i8 {
    if bits >> slot & 1 == 1 {
        -1
    } else {
        1
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn blade_grade_is_popcount(mask in 0usize..8) {
        let b = BladeMask::new(mask).unwrap();
        prop_assert_eq!(b.grade(), mask.count_ones() as usize);
    }

    #[test]
    fn ring_axioms(a in mv(), b in mv(), c in mv()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &Mv::one(), a.clone());
        prop_assert_eq!(&a - &a, Mv::zero());
    }

    #[test]
    fn vectors_square_to_their_norm(x in -9i64..=9, y in -9i64..=9, z in -9i64..=9) {
        let v = Mv::from_coeffs([0, x, y, 0, z, 0, 0, 0].map(rat));
        prop_assert_eq!(&v * &v, Mv::scalar(rat(x * x + y * y + z * z)));
    }

    #[test]
    fn render_parse_round_trip(a in mv()) {
        let text = a.to_string();
        let back: Mv = text.parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn mixed_modes_are_rejected(axis in 1usize..=3) {
        let exact = DynMultivector::basis_vector(axis, Mode::Exact).unwrap();
        let approx = DynMultivector::basis_vector(axis, Mode::Approx).unwrap();
        prop_assert!(geometric_product(&exact, &approx).is_err());
        prop_assert!(geometric_product(&exact, &exact).is_ok());
    }

    #[test]
    fn distinct_systems_commute(a in mv(), b in mv(), n in 2usize..=3, s1 in 1usize..=3, s2 in 1usize..=3) {
        prop_assume!(s1 <= n && s2 <= n && s1 != s2);
        let x = T::embed(s1, &a, n).unwrap();
        let y = T::embed(s2, &b, n).unwrap();
        prop_assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn embedding_is_multiplicative(a in mv(), b in mv(), s in 1usize..=3) {
        let lhs = T::embed(s, &(&a * &b), 3).unwrap();
        let rhs = &T::embed(s, &a, 3).unwrap() * &T::embed(s, &b, 3).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_product_is_associative(x in tensor(2), y in tensor(2), z in tensor(2)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn trivector_identification_is_a_homomorphism(x in tensor(3), y in tensor(3), h in prop::sample::select(vec![1i8, -1])) {
        let lhs = (&x * &y).identify_trivectors(h);
        let rhs = &x.identify_trivectors(h) * &y.identify_trivectors(h);
        prop_assert_eq!(lhs.identify_trivectors(h), rhs.identify_trivectors(h));
        prop_assert_eq!(lhs.identify_trivectors(h), lhs);
    }

    #[test]
    fn even_flips_keep_odd_flips_negate(perm in prop::sample::select(vec![[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]]), bits in 0u32..64) {
        let [i, j, k] = perm;
        let parity: i64 = if bits.count_ones() % 2 == 0 { 1 } else { -1 };
        let s = |sys: usize, a: usize| sign_bit(bits, (sys - 1) * 3 + a - 1);
        let plus = [(1, i), (1, j), (1, k), (2, j), (2, i), (2, k)];
        let factors: Vec<_> = plus.iter().map(|&(sys, a)| (s(sys, a), sys, a)).collect();
        let value = word(2, &factors).identify_trivectors(1);
        prop_assert_eq!(value.as_scalar(), Some(rat(parity)));
    }

    #[test]
    fn free_flips_leave_the_word_at_minus_one(i in 1usize..=3, j in 1usize..=3, bits in 0u32..64) {
        prop_assume!(i != j);
        let pattern = [(1, i), (1, i), (1, j), (1, j), (2, i), (2, j), (2, i), (2, j), (3, i), (3, j), (3, j), (3, i)];
        let factors: Vec<_> = pattern
            .iter()
            .map(|&(sys, a)| (sign_bit(bits, (sys - 1) * 2 + usize::from(a == j)), sys, a))
            .collect();
        prop_assert_eq!(word(3, &factors).as_scalar(), Some(rat(-1)));
    }

    #[test]
    fn vector_model_is_noncontextual_for_any_signs(name in prop::sample::select(vec!["pm", "ghz"]), bits in any::<u64>()) {
        let cs = builtin_constraints(name).unwrap();
        let va = VectorAssignment::from_bits(&cs, bits);
        prop_assert!(non_contextuality_audit(&cs, &va).unwrap().single_valued);
        for line in evaluate_vector_model::<Rational>(&cs, &va).unwrap() {
            if line.in_model() {
                prop_assert!(line.holds, "line {} gives {}", line.label, line.value);
            }
        }
    }

    #[test]
    fn observables_need_distinct_systems(s in 1usize..=3, a in 0usize..3, b in 0usize..3) {
        let axes = [Axis::X, Axis::Y, Axis::Z];
        let p = PauliSymbol::new(s, axes[a]).unwrap();
        let q = PauliSymbol::new(s, axes[b]).unwrap();
        prop_assert!(ObservableProduct::new(vec![p, q]).is_err());
    }

    #[test]
    fn columns_hold_signed_in_plane_vectors(index in 0usize..64) {
        let map = IdentityMap::all()[index];
        let col = bell_ghz_column(&map);
        for entry in &col.entries {
            let (sign, axis) = entry.as_signed_basis_vector().unwrap();
            prop_assert!(sign.abs() == 1 && (axis == 1 || axis == 2));
        }
        prop_assert_eq!(col.product, -Mv::one());
        let e12 = &Mv::basis_vector(1).unwrap() * &Mv::basis_vector(2).unwrap();
        for r in orientation_reading(&map).readings {
            prop_assert!(r.bivector == e12 || r.bivector == -&e12);
        }
    }

    #[test]
    fn coplanar_gamma_is_scalar_plus_e13(phi in 0.0..=PI) {
        let cfg = CoplanarConfig::new(phi).unwrap();
        for v in cfg.vectors() {
            prop_assert!(((v * v).scalar_part() - 1.0).abs() <= 1e-12);
        }
        let g = gamma_vector(&cfg);
        for grade in [1, 3] {
            prop_assert!(g.grade_project(grade).unwrap().max_abs() <= 1e-12);
        }
        prop_assert!(g.coeffs()[3].abs() <= 1e-12 && g.coeffs()[6].abs() <= 1e-12);
    }

    #[test]
    fn scans_never_exceed_the_quantum_bound(start in 0.0..1.5f64, width in 0.01..1.6f64, steps in 3usize..200) {
        let end = (start + width).min(PI);
        let scan = scan_range(start, end, steps).unwrap();
        prop_assert!(scan.max <= QM_BOUND + 1e-12);
        prop_assert!((start..=end).contains(&scan.argmax));
    }
}
