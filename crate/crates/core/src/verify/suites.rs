use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Recorder, VerifyOptions};
use crate::chsh;
use crate::error::Result;
use crate::ga::Multivector;
use crate::hv_models::{
    builtin_constraints, enumerate_scalar_assignments, evaluate_vector_model, non_contextuality_audit, ConstraintSet,
    LineValue, Sign, VectorAssignment,
};
use crate::identity_model::{
    self, bell_ghz_column, check_a3_incompatibility, find_identity_maps, orientation_reading, IdentityMap,
    SignedGenerator,
};
use crate::multi_system::TensorMultivector;
use crate::qm_oracle::{self, StateVector};
use crate::scalar::{Mode, Rational, Scalar, DEFAULT_TOLERANCE};

const PERMUTATIONS: [[usize; 3]; 6] = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
const RANDOM_SAMPLES: usize = 200;

fn ordered_pairs() -> impl Iterator<Item = (usize, usize)> {
    (1..=3).flat_map(|i| (1..=3).filter(move |&j| j != i).map(move |j| (i, j)))
}

fn perm_sign(p: [usize; 3]) -> i64 {
    let inversions = (0..3).flat_map(|a| (a + 1..3).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn signed_e<S: Scalar>(sign: i64, axis: usize) -> Multivector<S> {
    Multivector::<S>::basis_vector(axis).expect("axis").scale(&S::from_i64(sign))
}

fn word<S: Scalar>(factors: &[Multivector<S>]) -> Multivector<S> {
    factors.iter().fold(Multivector::one(), |acc, f| &acc * f)
}

fn is_scalar<S: Scalar>(m: &Multivector<S>, v: i64) -> bool {
    m.equals(&Multivector::scalar(S::from_i64(v)), DEFAULT_TOLERANCE)
}

fn random_multivector<S: Scalar>(rng: &mut ChaCha8Rng) -> Multivector<S> {
    Multivector::from_coeffs(std::array::from_fn(|_| S::from_i64(rng.gen_range(-5..=5))))
}

pub(super) fn algebra(rec: &mut Recorder, options: VerifyOptions) {
    match options.mode {
        Mode::Exact => algebra_in::<Rational>(rec, options.seed),
        Mode::Approx => algebra_in::<f64>(rec, options.seed),
    }
}

fn algebra_in<S: Scalar>(rec: &mut Recorder, seed: u64) {
    let e = |i: usize| Multivector::<S>::basis_vector(i).expect("axis");

    let mut ok = true;
    for i in 1..=3 {
        for j in 1..=3 {
            let lhs = &(&e(i) * &e(j)) + &(&e(j) * &e(i));
            ok &= is_scalar(&lhs, if i == j { 2 } else { 0 });
        }
    }
    rec.record("algebra.anticommutator", "e_i e_j + e_j e_i = 2δ_ij", ok, "9/9 index pairs");

    let ok = (1..=3).all(|i| is_scalar(&(&e(i) * &e(i)), 1));
    rec.record("algebra.normalization", "e_i e_i = 1", ok, "3/3 axes");

    let ok = ordered_pairs().all(|(i, j)| (&e(i) * &e(j)).equals(&-(&e(j) * &e(i)), DEFAULT_TOLERANCE));
    rec.record("algebra.anticommutation", "e_i e_j = −e_j e_i", ok, "6/6 ordered pairs");

    let ok = ordered_pairs().all(|(i, j)| {
        is_scalar(&word(&[e(i), e(j), e(j), e(i)]), 1) && is_scalar(&word(&[e(i), e(j), e(i), e(j)]), -1)
    });
    rec.record("algebra.bivector_words", "e_i e_j e_j e_i = 1, e_i e_j e_i e_j = −1", ok, "6/6 ordered pairs");

    let pseudo = Multivector::<S>::pseudoscalar();
    let ok = PERMUTATIONS.iter().all(|&[i, j, k]| {
        word(&[e(i), e(j), e(k)]).equals(&pseudo.scale(&S::from_i64(perm_sign([i, j, k]))), DEFAULT_TOLERANCE)
            && is_scalar(&word(&[e(i), e(j), e(k), e(k), e(j), e(i)]), 1)
            && is_scalar(&word(&[e(i), e(j), e(k), e(i), e(j), e(k)]), -1)
    });
    rec.record(
        "algebra.trivector_words",
        "e_i e_j e_k = ±e123, e_i e_j e_k e_k e_j e_i = 1, e_i e_j e_k e_i e_j e_k = −1",
        ok,
        "6/6 permutations",
    );

    let ok = is_scalar(&(&pseudo * &pseudo), -1)
        && (1..=3).all(|i| (&pseudo * &e(i)).equals(&(&e(i) * &pseudo), DEFAULT_TOLERANCE));
    rec.record("algebra.pseudoscalar", "I² = −1, I central", ok, format!("I² = {}", &pseudo * &pseudo));

    let signs = [1i64, -1];
    let mut count = 0;
    let mut ok = true;
    for (i, j) in ordered_pairs() {
        for s in signs {
            for t in signs {
                let (a, b) = (signed_e::<S>(s, i), signed_e::<S>(t, j));
                ok &= is_scalar(&word(&[a.clone(), b.clone(), b.clone(), a.clone()]), 1);
                ok &= is_scalar(&word(&[a.clone(), b.clone(), a, b]), -1);
                count += 1;
            }
        }
    }
    rec.record(
        "algebra.sign_flips_2d",
        "σ_i σ_j σ_j σ_i = 1, σ_i σ_j σ_i σ_j = −1",
        ok,
        format!("{count} sign choices"),
    );

    let mut count = 0;
    let mut ok = true;
    for p in PERMUTATIONS {
        for bits in 0..8 {
            let v: Vec<Multivector<S>> =
                (0..3).map(|k| signed_e::<S>(if bits >> k & 1 == 1 { -1 } else { 1 }, p[k])).collect();
            ok &= is_scalar(
                &word(&[v[0].clone(), v[1].clone(), v[2].clone(), v[2].clone(), v[1].clone(), v[0].clone()]),
                1,
            );
            ok &= is_scalar(
                &word(&[v[0].clone(), v[1].clone(), v[2].clone(), v[0].clone(), v[1].clone(), v[2].clone()]),
                -1,
            );
            count += 1;
        }
    }
    rec.record(
        "algebra.sign_flips_3d",
        "σ_i σ_j σ_k σ_k σ_j σ_i = 1, σ_i σ_j σ_k σ_i σ_j σ_k = −1",
        ok,
        format!("{count} sign choices"),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<[Multivector<S>; 3]> =
        (0..RANDOM_SAMPLES).map(|_| std::array::from_fn(|_| random_multivector::<S>(&mut rng))).collect();
    let assoc = samples.iter().filter(|[a, b, c]| (&(a * b) * c).equals(&(a * &(b * c)), DEFAULT_TOLERANCE)).count();
    rec.record(
        "algebra.associativity",
        "(ab)c = a(bc)",
        assoc == RANDOM_SAMPLES,
        format!("{assoc}/{RANDOM_SAMPLES} random triples"),
    );
    let distrib =
        samples.iter().filter(|[a, b, c]| (a * &(b + c)).equals(&(&(a * b) + &(a * c)), DEFAULT_TOLERANCE)).count();
    rec.record(
        "algebra.distributivity",
        "a(b + c) = ab + ac",
        distrib == RANDOM_SAMPLES,
        format!("{distrib}/{RANDOM_SAMPLES} random triples"),
    );
}

pub(super) fn multi_system(rec: &mut Recorder, options: VerifyOptions) {
    match options.mode {
        Mode::Exact => multi_system_in::<Rational>(rec),
        Mode::Approx => multi_system_in::<f64>(rec),
    }
}

type Gen = (i64, usize, usize);

/// Product of signed generators `(sign, system, axis)` in the given order.
fn tensor_word<S: Scalar>(systems: usize, factors: &[Gen]) -> Result<TensorMultivector<S>> {
    let gens = factors
        .iter()
        .map(|&(sign, system, axis)| TensorMultivector::signed_generator(sign as i8, system, axis, systems))
        .collect::<Result<Vec<_>>>()?;
    TensorMultivector::word(systems, &gens)
}

/// [`tensor_word`] read with the systems' trivectors identified.
fn identified_word<S: Scalar>(systems: usize, factors: &[Gen]) -> Result<TensorMultivector<S>> {
    Ok(tensor_word::<S>(systems, factors)?.identify_trivectors(1))
}

fn tensor_is<S: Scalar>(t: &TensorMultivector<S>, v: i64) -> bool {
    t.as_scalar().is_some_and(|s| s.close_to(&S::from_i64(v), DEFAULT_TOLERANCE))
}

fn with_signs(factors: &[(usize, usize)], signs: &dyn Fn(usize, usize) -> i64) -> Vec<Gen> {
    factors.iter().map(|&(s, a)| (signs(s, a), s, a)).collect()
}

fn multi_system_in<S: Scalar>(rec: &mut Recorder) {
    rec.record_result(
        "multi.cross_commutation",
        "generators of distinct systems commute",
        (|| {
            let mut pairs = 0;
            let mut ok = true;
            for (sa, a) in (1..=3).flat_map(|s| (1..=3).map(move |a| (s, a))) {
                for (sb, b) in (1..=3).flat_map(|s| (1..=3).map(move |a| (s, a))) {
                    let x = TensorMultivector::<S>::generator(sa, a, 3)?;
                    let y = TensorMultivector::<S>::generator(sb, b, 3)?;
                    let commute = x.product(&y)?.equals(&y.product(&x)?, DEFAULT_TOLERANCE);
                    ok &= commute == (sa != sb || a == b);
                    pairs += 1;
                }
            }
            Ok((ok, format!("{pairs} generator pairs, N=3")))
        })(),
    );

    rec.record_result(
        "multi.within_system",
        "each copy satisfies the single-copy relations",
        (|| {
            let mut ok = true;
            for s in 1..=3 {
                for i in 1..=3 {
                    ok &= tensor_is(&tensor_word::<S>(3, &[(1, s, i), (1, s, i)])?, 1);
                }
                for (i, j) in ordered_pairs() {
                    let ij = tensor_word::<S>(3, &[(1, s, i), (1, s, j)])?;
                    let ji = tensor_word::<S>(3, &[(1, s, j), (1, s, i)])?;
                    ok &= ij.equals(&-ji, DEFAULT_TOLERANCE);
                }
                let pseudo = [(1, s, 1), (1, s, 2), (1, s, 3)];
                ok &= tensor_is(&tensor_word::<S>(3, &[pseudo, pseudo].concat())?, -1);
            }
            Ok((ok, "3 systems".to_string()))
        })(),
    );

    rec.record_result(
        "multi.trivector_pair_words",
        "with e123 = f123: e_i e_j e_k f_j f_i f_k = 1, e_i e_j e_k f_i f_j f_k = −1",
        (|| {
            let mut ok = true;
            for [i, j, k] in PERMUTATIONS {
                ok &= tensor_is(
                    &identified_word::<S>(2, &[(1, 1, i), (1, 1, j), (1, 1, k), (1, 2, j), (1, 2, i), (1, 2, k)])?,
                    1,
                );
                ok &= tensor_is(
                    &identified_word::<S>(2, &[(1, 1, i), (1, 1, j), (1, 1, k), (1, 2, i), (1, 2, j), (1, 2, k)])?,
                    -1,
                );
            }
            let raw = tensor_word::<S>(2, &[(1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 2), (1, 2, 1), (1, 2, 3)])?;
            Ok((ok, format!("e1e2e3·f2f1f3 = {raw} = {} with e123 = f123; 6 permutations", raw.identify_trivectors(1))))
        })(),
    );

    rec.record_result(
        "multi.interleaved_words",
        "with e123 = f123: e_i f_j e_j f_i e_k f_k = 1, e_i f_i e_j f_j e_k f_k = −1",
        (|| {
            let mut ok = true;
            for [i, j, k] in PERMUTATIONS {
                ok &= tensor_is(
                    &identified_word::<S>(2, &[(1, 1, i), (1, 2, j), (1, 1, j), (1, 2, i), (1, 1, k), (1, 2, k)])?,
                    1,
                );
                ok &= tensor_is(
                    &identified_word::<S>(2, &[(1, 1, i), (1, 2, i), (1, 1, j), (1, 2, j), (1, 1, k), (1, 2, k)])?,
                    -1,
                );
            }
            Ok((ok, "6 permutations".to_string()))
        })(),
    );

    rec.record_result(
        "multi.even_odd_flips",
        "even flips keep, odd flips negate",
        (|| {
            let mut ok = true;
            let mut choices = 0;
            for [i, j, k] in PERMUTATIONS {
                let plus = [(1, i), (1, j), (1, k), (2, j), (2, i), (2, k)];
                let minus = [(1, i), (1, j), (1, k), (2, i), (2, j), (2, k)];
                for bits in 0u32..64 {
                    let sign_of = |s: usize, a: usize| if bits >> ((s - 1) * 3 + a - 1) & 1 == 1 { -1 } else { 1 };
                    let parity = if bits.count_ones() % 2 == 0 { 1 } else { -1 };
                    ok &= tensor_is(&identified_word::<S>(2, &with_signs(&plus, &sign_of))?, parity);
                    ok &= tensor_is(&identified_word::<S>(2, &with_signs(&minus, &sign_of))?, -parity);
                    choices += 1;
                }
            }
            Ok((ok, format!("{choices} sign choices per word")))
        })(),
    );

    rec.record_result(
        "multi.free_flips",
        "e_i e_i e_j e_j f_i f_j f_i f_j g_i g_j g_j g_i = −1 for all signs",
        (|| {
            let mut ok = true;
            let mut choices = 0;
            for (i, j) in ordered_pairs() {
                let factors =
                    [(1, i), (1, i), (1, j), (1, j), (2, i), (2, j), (2, i), (2, j), (3, i), (3, j), (3, j), (3, i)];
                for bits in 0u32..64 {
                    let sign_of = |s: usize, a: usize| {
                        let slot = (s - 1) * 2 + usize::from(a == j);
                        if bits >> slot & 1 == 1 {
                            -1
                        } else {
                            1
                        }
                    };
                    ok &= tensor_is(&tensor_word::<S>(3, &with_signs(&factors, &sign_of))?, -1);
                    choices += 1;
                }
            }
            Ok((ok, format!("{choices} sign choices")))
        })(),
    );

    rec.record_result(
        "multi.three_system_word",
        "e_i f_i g_i e_j f_j g_j e_i f_i g_i e_j f_j g_j = −1",
        (|| {
            let mut ok = true;
            for (i, j) in ordered_pairs() {
                let half = [(1, 1, i), (1, 2, i), (1, 3, i), (1, 1, j), (1, 2, j), (1, 3, j)];
                ok &= tensor_is(&tensor_word::<S>(3, &[half, half].concat())?, -1);
            }
            Ok((ok, "6 ordered pairs".to_string()))
        })(),
    );
}

fn render_scalars<S: Scalar>(lines: &[LineValue<S>]) -> String {
    let parts: Vec<String> = lines.iter().map(|l| l.value.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub(super) fn constraint_system(rec: &mut Recorder, name: &str, options: VerifyOptions) {
    let cs = builtin_constraints(name).expect("builtin");

    match qm_oracle::verify_operator_identities(name) {
        Ok(lines) => {
            for l in lines {
                let witness = match l.result {
                    Some(1) => format!("+I({})", 1 << cs.system_count()),
                    Some(_) => format!("−I({})", 1 << cs.system_count()),
                    None => "not ±identity".to_string(),
                };
                rec.record(
                    format!("{name}.operator.{}", l.label),
                    "operator word equals ±identity",
                    l.passed(),
                    witness,
                );
            }
        }
        Err(e) => rec.record(format!("{name}.operator"), "operator word equals ±identity", false, e.to_string()),
    }

    scalar_search_checks(rec, name, &cs);

    match options.mode {
        Mode::Exact => vector_model_checks::<Rational>(rec, name, &cs),
        Mode::Approx => vector_model_checks::<f64>(rec, name, &cs),
    }
}

fn scalar_search_checks(rec: &mut Recorder, name: &str, cs: &ConstraintSet) {
    rec.record_result(
        format!("{name}.enumeration"),
        "no ±1 assignment satisfies every line",
        (|| {
            let s = enumerate_scalar_assignments(cs)?;
            let lhs = s.parity.lhs_product.map_or("undetermined".to_string(), |p| p.to_string());
            Ok((
                s.satisfying_count == 0 && s.parity.is_contradiction(),
                format!(
                    "{}/{} satisfying; lhs product {lhs}, rhs product {}",
                    s.satisfying_count, s.candidates, s.parity.rhs_product
                ),
            ))
        })(),
    );

    rec.record_result(
        format!("{name}.minimality"),
        "dropping or flipping any one line is satisfiable",
        (|| {
            let mut ok = true;
            for k in 0..cs.lines.len() {
                ok &= enumerate_scalar_assignments(&cs.without_line(k))?.satisfying_count > 0;
                ok &= enumerate_scalar_assignments(&cs.with_flipped_line(k))?.satisfying_count > 0;
            }
            Ok((ok, format!("{} lines probed", cs.lines.len())))
        })(),
    );
}

fn vector_model_checks<S: Scalar>(rec: &mut Recorder, name: &str, cs: &ConstraintSet) {
    let va = VectorAssignment::all_positive(cs);
    match evaluate_vector_model::<S>(cs, &va) {
        Ok(lines) => {
            for l in &lines {
                rec.record(
                    format!("{name}.vector.line.{}", l.label),
                    "line value under the value, product and commutativity assumptions",
                    l.holds && l.in_model(),
                    format!("{} (required {})", l.value, l.required),
                );
            }
            let product = TensorMultivector::word(cs.system_count(), lines.iter().map(|l| &l.value));
            let ok = product.as_ref().is_ok_and(|p| tensor_is(p, -1));
            rec.record(
                format!("{name}.vector.product"),
                "product of all line values is −1",
                ok,
                render_scalars(&lines),
            );
        }
        Err(e) => rec.record(format!("{name}.vector"), "vector model", false, e.to_string()),
    }

    rec.record_result(
        format!("{name}.vector.sign_choices"),
        "line values under sign changes of the generators",
        (|| {
            let symbols = cs.elementary_symbols();
            let base = evaluate_vector_model::<S>(cs, &va)?;
            let mut ok = true;
            for bits in 0..1u64 << symbols.len() {
                let flipped = VectorAssignment::from_bits(cs, bits);
                let lines = evaluate_vector_model::<S>(cs, &flipped)?;
                let negated_in = |system: usize| {
                    symbols.iter().enumerate().filter(|(k, s)| s.system() == system && bits >> k & 1 == 1).count()
                };
                let even_per_system = (1..=cs.system_count()).all(|s| negated_in(s) % 2 == 0);
                for (l, b) in lines.iter().zip(&base) {
                    if l.odd_flips == 0 {
                        // Every generator of the line occurs an even number of times.
                        ok &= l.value.equals(&b.value, DEFAULT_TOLERANCE);
                    } else if even_per_system {
                        ok &= l.value.equals(&b.value, DEFAULT_TOLERANCE);
                    }
                }
            }
            Ok((ok, format!("{} sign choices", 1u64 << symbols.len())))
        })(),
    );

    rec.record_result(
        format!("{name}.audit"),
        "each observable has one value across lines",
        (|| {
            let audit = non_contextuality_audit(cs, &va)?;
            let first = audit.entries.iter().find(|e| e.occurrences.len() > 1).map(|e| {
                let lines: Vec<&str> = e.occurrences.iter().map(|o| o.line.as_str()).collect();
                format!("[{}] = {} in lines {}", e.observable, e.value.as_deref().unwrap_or("?"), lines.join(", "))
            });
            Ok((audit.single_valued, format!("{} observables; {}", audit.entries.len(), first.unwrap_or_default())))
        })(),
    );
}

fn column_string(map: &IdentityMap) -> String {
    format!("({})", bell_ghz_column(map).rendered().join(", "))
}

pub(super) fn bell_ghz(rec: &mut Recorder) {
    let cs = builtin_constraints("bell_ghz").expect("builtin");
    scalar_search_checks(rec, "bell-ghz", &cs);

    let e = |i: usize| Multivector::<Rational>::basis_vector(i).expect("axis");
    let minus_one = identity_model::minus_one();

    let phi = IdentityMap::phi();
    let col = bell_ghz_column(&phi);
    rec.record(
        "bell-ghz.column.phi",
        "column under e1 = −f1 = g1, e2 = f2 = g2",
        col.entries == [e(1), e(1), e(1), -e(1)] && col.product == minus_one,
        format!("{} {phi}", column_string(&phi)),
    );

    let id = IdentityMap::identity();
    let col = bell_ghz_column(&id);
    rec.record(
        "bell-ghz.column.identity",
        "column under e = f = g",
        col.entries == [e(1), -e(1), e(1), e(1)] && col.product == minus_one,
        column_string(&id),
    );

    let maps = IdentityMap::all();
    let ok = maps.iter().all(|m| {
        let c = bell_ghz_column(m);
        c.product == minus_one && c.entries.iter().all(|v| v.as_signed_basis_vector().is_some_and(|(_, a)| a <= 2))
    });
    rec.record("bell-ghz.column.all_maps", "every column multiplies to −1", ok, format!("{} maps", maps.len()));

    for target in ["e1", "-e1", "e2", "-e2"] {
        rec.record_result(
            format!("bell-ghz.search.{target}"),
            "column of the form (x, x, x, −x)",
            (|| {
                let g: SignedGenerator = target.parse()?;
                let found = find_identity_maps(g)?;
                let round_trip = found.iter().all(|m| {
                    let x = m.image_of(g).map(|s| s.to_multivector());
                    x.is_ok_and(|x| bell_ghz_column(m).entries == [x.clone(), x.clone(), x.clone(), -x])
                });
                let mut ok = !found.is_empty() && round_trip;
                if target == "e1" {
                    ok &= found.contains(&phi);
                }
                Ok((
                    ok,
                    format!(
                        "{} maps; first {}",
                        found.len(),
                        found.first().map(ToString::to_string).unwrap_or_default()
                    ),
                ))
            })(),
        );
    }

    let e12 = identity_model::e12();
    let r = orientation_reading(&phi);
    let rendered: Vec<String> = r.readings.iter().map(|x| x.bivector.to_string()).collect();
    rec.record(
        "bell-ghz.orientation.phi",
        "all three systems share one orientation",
        r.readings.iter().all(|x| x.bivector == e12) && r.identical(1, 2) && r.identical(1, 3),
        rendered.join(", "),
    );
    let r = orientation_reading(&id);
    let rendered: Vec<String> = r.readings.iter().map(|x| x.bivector.to_string()).collect();
    rec.record(
        "bell-ghz.orientation.phi_prime",
        "systems 1 and 3 agree, system 2 is opposite",
        r.readings[0].bivector == e12 && r.readings[1].bivector == -&e12 && r.readings[2].bivector == e12,
        format!("{} (system 2 read as {}{})", rendered.join(", "), r.readings[1].order[0], r.readings[1].order[1]),
    );

    let ok = maps.iter().all(|m| {
        let r = orientation_reading(m);
        let h2 = m.handedness(2).expect("system 2");
        let h3 = m.handedness(3).expect("system 3");
        r.identical(1, 2) == (h2 == Sign::Minus) && r.identical(1, 3) == (h3 == Sign::Plus)
    });
    rec.record(
        "bell-ghz.orientation.handedness",
        "readings agree with sign(perm)·(image signs)",
        ok,
        format!("{} maps", maps.len()),
    );

    rec.record_result(
        "bell-ghz.state_correspondence",
        "column signs match the state's eigenvalues",
        (|| {
            let products = identity_model::bell_ghz_products();
            let mut ok = true;
            for (map, state) in [(&phi, StateVector::phi()), (&id, StateVector::phi_prime())] {
                let col = bell_ghz_column(map);
                for (entry, p) in col.entries.iter().zip(&products) {
                    let sign = entry.as_signed_basis_vector().map(|(s, _)| Sign::from_bit(s < 0));
                    ok &= sign == qm_oracle::eigenvalue_of(&state, p)?;
                }
            }
            Ok((ok, "2 maps".to_string()))
        })(),
    );
}

pub(super) fn operators(rec: &mut Recorder) {
    let anti = qm_oracle::check_pauli_anticommutation();
    let ok = anti.iter().all(|c| c.2);
    rec.record(
        "operators.pauli_anticommutation",
        "σ_i σ_j + σ_j σ_i = 2δ_ij·1",
        ok,
        format!("{}/9 pairs", anti.iter().filter(|c| c.2).count()),
    );

    for n in [2, 3] {
        rec.record_result(
            format!("operators.cross_system.n{n}"),
            "σ^a_i σ^b_j = σ^b_j σ^a_i",
            (|| {
                let (pairs, ok) = qm_oracle::check_cross_system_commutation(n)?;
                Ok((ok, format!("{pairs} ordered pairs")))
            })(),
        );
    }

    for name in ["pm", "ghz"] {
        rec.record_result(
            format!("operators.{name}"),
            "line words equal ±identity; members commute",
            (|| {
                let lines = qm_oracle::verify_operator_identities(name)?;
                let signs: Vec<String> =
                    lines.iter().map(|l| l.result.map_or("?".to_string(), |s| s.to_string())).collect();
                Ok((lines.iter().all(|l| l.passed()), format!("({})", signs.join(", "))))
            })(),
        );
    }

    rec.record_result(
        "operators.hermitian_unitary",
        "observables are Hermitian and unitary",
        (|| {
            let mut count = 0;
            let mut ok = true;
            for name in ["pm", "ghz"] {
                let cs = builtin_constraints(name)?;
                for obs in &cs.observables {
                    let m = qm_oracle::observable_matrix::<qm_oracle::GaussianRational>(obs, cs.system_count())?;
                    ok &= m.is_hermitian() && m.is_unitary();
                    count += 1;
                }
            }
            Ok((ok, format!("{count} observables")))
        })(),
    );

    let iso = qm_oracle::check_ga_isomorphism();
    rec.record(
        "operators.ga_isomorphism",
        "e_i ↦ σ_i is an algebra isomorphism",
        iso.passed(),
        format!("{}/64 blade products; images independent: {}", iso.multiplicative_pairs, iso.images_independent),
    );
}

fn random_unit(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if n > 1e-3 {
            return v.map(|c| c / n);
        }
    }
}

pub(super) fn states(rec: &mut Recorder, options: VerifyOptions) {
    let products = identity_model::bell_ghz_products();
    for (id, state, expected) in [
        ("phi", StateVector::phi(), [Sign::Plus, Sign::Plus, Sign::Plus, Sign::Minus]),
        ("phi_prime", StateVector::phi_prime(), [Sign::Plus, Sign::Minus, Sign::Plus, Sign::Plus]),
    ] {
        rec.record(
            format!("states.norm.{id}"),
            "squared norm is exactly 1",
            state.norm_sqr() == qm_oracle::QSqrt2::one(),
            state.norm_sqr().to_string(),
        );
        rec.record_result(
            format!("states.eigenvalues.{id}"),
            "eigenvalues on xyy, yxy, yyx, xxx",
            (|| {
                let got = products.iter().map(|p| qm_oracle::eigenvalue_of(&state, p)).collect::<Result<Vec<_>>>()?;
                let rendered: Vec<String> = got.iter().map(|s| s.map_or("none".into(), |s| s.to_string())).collect();
                Ok((got == expected.map(Some), format!("({})", rendered.join(", "))))
            })(),
        );
    }

    rec.record_result(
        "states.phi_not_eigen_x1",
        "Φ is not an eigenstate of σ¹x",
        (|| {
            let x1 = "x1".parse()?;
            let v = qm_oracle::eigenvalue_of(&StateVector::phi(), &x1)?;
            Ok((v.is_none(), format!("{v:?}")))
        })(),
    );

    rec.record_result(
        "states.singlet",
        "singlet correlation equals −a·b",
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(options.seed ^ 0x5151);
            let mut worst = 0.0f64;
            for _ in 0..100 {
                let (a, b) = (random_unit(&mut rng), random_unit(&mut rng));
                let dot: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
                worst = worst.max((qm_oracle::singlet_correlation(a, b)? + dot).abs());
            }
            let e1 = [1.0, 0.0, 0.0];
            let at_60 = [0.5, 0.0, 3f64.sqrt() / 2.0];
            let fixed = (qm_oracle::singlet_correlation(e1, e1)? + 1.0).abs() <= 1e-12
                && qm_oracle::singlet_correlation(e1, [0.0, 1.0, 0.0])?.abs() <= 1e-12
                && (qm_oracle::singlet_correlation(e1, at_60)? + 0.5).abs() <= 1e-12;
            Ok((worst <= 1e-12 && fixed, format!("100 random pairs, max deviation {worst:.3e}")))
        })(),
    );
}

pub(super) fn a3(rec: &mut Recorder) {
    for (i, j) in ordered_pairs() {
        rec.record_result(
            format!("a3.e{i}e{j}"),
            "identification and commutation are incompatible",
            (|| {
                let c = check_a3_incompatibility(i, j)?;
                let expected = Multivector::<Rational>::basis_vector(j)?.scale(&crate::scalar::rat(2));
                Ok((c == expected && !c.is_zero(), format!("e{i}(e{i}e{j}) − (e{i}e{j})e{i} = {c}")))
            })(),
        );
    }
}

pub(super) fn chsh(rec: &mut Recorder) {
    let classical = chsh::classical_gamma_enumeration();
    rec.record(
        "chsh.classical",
        "scalar γ = ±2",
        classical.len() == 16 && classical.iter().all(|g| g.gamma.abs() == 2),
        format!("{} assignments", classical.len()),
    );

    for (id, phi, expected) in
        [("pi_over_4", PI / 4.0, 1.0 + 2f64.sqrt()), ("pi_over_3", PI / 3.0, 2.5), ("pi", PI, 2.0)]
    {
        rec.record_result(
            format!("chsh.f.{id}"),
            "F(φ) = |1 + 2cosφ − cos2φ|",
            (|| {
                let f = chsh::f_value(phi)?;
                Ok(((f - expected).abs() <= 1e-12, format!("F = {f:.15}")))
            })(),
        );
    }

    rec.record_result(
        "chsh.scan",
        "F(φ) ≤ 5/2 with the maximum at π/3",
        (|| {
            let scan = chsh::scan_f(100_000)?;
            let bounded = chsh::grid(0.0, PI, 100_000)?
                .into_iter()
                .try_fold(true, |ok, phi| Ok::<_, crate::Error>(ok && chsh::f_value(phi)? <= 2.5 + 1e-9))?;
            let ok = (scan.max - 2.5).abs() <= 1e-8 && (scan.argmax - PI / 3.0).abs() <= 1e-4 && bounded;
            Ok((ok, scan.summary()))
        })(),
    );

    rec.record_result("chsh.grid", "γ matches its closed form, is even, and the quantum value equals F", (|| {
        let mut worst_closed = 0.0f64;
        let mut worst_odd = 0.0f64;
        let mut worst_qm = 0.0f64;
        let mut worst_scalar = 0.0f64;
        let mut collinear_inside = 0;
        let grid = chsh::grid(0.0, PI, 1000)?;
        for &phi in &grid {
            let cfg = chsh::CoplanarConfig::new(phi)?;
            let g = chsh::gamma_vector(&cfg);
            worst_closed = worst_closed.max((&g - &chsh::gamma_closed_form(phi)).max_abs());
            worst_odd = worst_odd.max(g.grade_project(1)?.max_abs()).max(g.grade_project(3)?.max_abs());
            worst_scalar = worst_scalar.max((g.scalar_part().abs() - chsh::f_closed_form(phi)).abs());
            worst_qm = worst_qm.max((chsh::chsh_quantum_lhs(phi)? - chsh::f_value(phi)?).abs());
            if phi > 0.0 && phi < PI && !chsh::non_collinearity_witness(&cfg).both_nonzero() {
                collinear_inside += 1;
            }
        }
        let ok = worst_closed <= 1e-12 && worst_odd <= 1e-12 && worst_scalar <= 1e-12 && worst_qm <= 1e-12 && collinear_inside == 0;
        Ok((
            ok,
            format!(
                "{} points; closed form {worst_closed:.1e}, odd grades {worst_odd:.1e}, scalar part {worst_scalar:.1e}, quantum {worst_qm:.1e}",
                grid.len()
            ),
        ))
    })());

    rec.record_result(
        "chsh.bounds",
        "classical bound 2, vector-model maximum 5/2",
        (|| {
            let scan = chsh::scan_f(10_001)?;
            Ok((
                scan.max > chsh::CLASSICAL_BOUND && scan.max <= chsh::QM_BOUND + 1e-9,
                format!("classical {} < max F {:.6} ≤ {}", chsh::CLASSICAL_BOUND, scan.max, chsh::QM_BOUND),
            ))
        })(),
    );
}
