//! The five checks. Each returns `Err(message)` at the first failed assertion,
//! after recording what it computed so far into the certificate.

use num_bigint::BigInt;
use serde_json::{json, Map, Value as Json};

use super::pipeline::*;
use super::tables::{GeneratorTables, GeometryTables, Step1Tables, Steps2to4Tables, Theorem1Tables, DISPLAYED_S_MATRIX, REFERENCE_LIFTS, REFERENCE_PHI};
use crate::cohomology::{
    arguments, bar_cohomology, cochain_table_json, coboundary_witness, differential, first_difference, is_cocycle,
    symbol_cocycle, tate_h_minus1, Cochain, FiniteGroup, GLattice, GModule, Mu3, Multiplicative,
};
use crate::exact::{hermite_basis, integer_kernel, IntMatrix};
use crate::geometry::{
    action_on_pic_from, basic_function, build_lines, divisor_class, divisor_of_function, exceptional_lines,
    intersection_form, lines_intersect, FieldAutomorphism, IncidenceGraph, MonomialFunction, LineFamily, LineLabel, LineTable,
    PicVector, Polynomial, HYPERPLANE,
};

pub type Outcome = Result<(), String>;

/// Named facts established by a check.
#[derive(Default)]
pub struct Certificate(Map<String, Json>);

impl Certificate {
    pub fn record(&mut self, key: &str, value: Json) {
        self.0.insert(key.to_string(), value);
    }

    pub fn into_json(self) -> Json {
        Json::Object(self.0)
    }
}

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn spell(args: &[FieldAutomorphism]) -> String {
    args.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

/// Everything about lines, incidences and `Pic`, with the incidence graph supplied
/// by the caller (so that a corrupted graph can be tested).
pub fn check_geometry(tables: &GeometryTables, graph: &IncidenceGraph, cert: &mut Certificate) -> Outcome {
    let lines = build_lines();
    ensure(lines.len() == 27, || format!("{} lines constructed", lines.len()))?;
    let surface = Polynomial::surface();
    for (label, pair) in &lines {
        ensure(surface.vanishes_on(pair), || format!("{label} does not lie on the surface"))?;
    }
    let table = LineTable::get();
    let labels = LineLabel::all();
    for (i, &a) in labels.iter().enumerate() {
        ensure(!graph.adjacent(a, a), || format!("edge ({}, {}): a line is marked as meeting itself", a.key(), a.key()))?;
        for &b in &labels[i + 1..] {
            let meet = lines_intersect(table.planes(a), table.planes(b)).map_err(err)?;
            ensure(graph.adjacent(a, b) == meet && graph.adjacent(b, a) == meet, || {
                format!(
                    "edge ({}, {}): graph says {}, determinant says {meet}",
                    a.key(),
                    b.key(),
                    graph.adjacent(a, b)
                )
            })?;
        }
    }
    for &a in &labels {
        ensure(graph.degree(a) == tables.degree, || format!("{} has degree {}", a.key(), graph.degree(a)))?;
    }
    ensure(graph.edge_count() == tables.edges, || format!("{} edges", graph.edge_count()))?;
    cert.record("degree", json!(tables.degree));
    cert.record("edges", json!(graph.edge_count()));
    let six = exceptional_lines();
    for (i, &a) in six.iter().enumerate() {
        for &b in &six[i + 1..] {
            ensure(!graph.adjacent(a, b), || format!("blowdown lines {} and {} meet", a.key(), b.key()))?;
        }
    }
    let classes = graph.pic_classes().map_err(err)?;
    let lp0 = classes[LineLabel::new(LineFamily::Lp, 0).ordinal()];
    let ldp0 = classes[LineLabel::new(LineFamily::Ldp, 0).ordinal()];
    cert.record("class_Lp0", json!(lp0));
    cert.record("class_Ldp0", json!(ldp0));
    ensure(lp0 == tables.class_lp0, || format!("[L′(0)] = {lp0:?}, expected {:?}", tables.class_lp0))?;
    ensure(ldp0 == tables.class_ldp0, || format!("[L″(0)] = {ldp0:?}, expected {:?}", tables.class_ldp0))?;
    let q = intersection_form();
    let h = big(&HYPERPLANE);
    let mut matrices = Vec::new();
    for g in [FieldAutomorphism::s(), FieldAutomorphism::t(), FieldAutomorphism::w()] {
        let m = action_on_pic_from(&classes, g).map_err(err)?;
        ensure(&(&m.transpose() * &q) * &m == q, || format!("{g} does not preserve the intersection form"))?;
        ensure(m.mul_vec(&h) == h, || format!("{g} moves the hyperplane class"))?;
        ensure(m.pow(3).is_identity(), || format!("{g} does not have order 3"))?;
        matrices.push(m);
    }
    // rank-5 lattice fixed by w
    let kernel = integer_kernel(&matrices[2].sub(&IntMatrix::identity(7)));
    let invariants = hermite_basis(&(0..kernel.cols()).map(|j| kernel.col(j)).collect::<Vec<_>>());
    let displayed = hermite_basis(&tables.rank5_basis.iter().map(|v| big(v)).collect::<Vec<_>>());
    ensure(invariants == displayed, || "w-invariants differ from span(l, [L(0)], [L(1)], [L(2)], [M])".into())?;
    cert.record("w_invariant_rank", json!(invariants.len()));
    // the displayed matrix of s, rows = images
    let basis: Vec<Vec<i64>> = tables.rank5_basis.iter().map(|v| v.to_vec()).collect();
    let mut rows = [[0i64; 5]; 5];
    for (j, v) in basis.iter().enumerate() {
        let image: Vec<i64> = matrices[0].mul_vec(&big(v)).iter().map(|x| x.try_into().expect("small")).collect();
        let coords = GLattice::coordinates_in(&basis, &image)
            .ok_or_else(|| format!("s moves basis vector {j} out of the rank-5 lattice"))?;
        rows[j].copy_from_slice(&coords);
    }
    cert.record("s_matrix", json!(rows));
    let displayed: Vec<String> = (0..25)
        .filter(|k| rows[k / 5][k % 5] != DISPLAYED_S_MATRIX[k / 5][k % 5])
        .map(|k| format!("({}, {}): computed {}, displayed {}", k / 5, k % 5, rows[k / 5][k % 5], DISPLAYED_S_MATRIX[k / 5][k % 5]))
        .collect();
    cert.record("differs_from_display", json!(displayed));
    for i in 0..5 {
        for j in 0..5 {
            ensure(rows[i][j] == tables.s_matrix[i][j], || {
                format!("s-matrix entry ({i}, {j}) is {}, displayed {}", rows[i][j], tables.s_matrix[i][j])
            })?;
        }
    }
    Ok(())
}

/// `w`-invariant lattice with the given basis as a module over `group`, after
/// checking that the basis really spans it.
fn rank5_module(group: &FiniteGroup, basis: &[PicVector; 5]) -> Result<GLattice, String> {
    let pic = pic_lattice(group).map_err(err)?;
    let rows: Vec<Vec<i64>> = basis.iter().map(|v| v.to_vec()).collect();
    let w = pic_lattice(&FiniteGroup::generated_by(&[FieldAutomorphism::w()])).map_err(err)?;
    let kernel = integer_kernel(&w.int_matrix(FieldAutomorphism::w()).sub(&IntMatrix::identity(7)));
    let invariants = hermite_basis(&(0..kernel.cols()).map(|j| kernel.col(j)).collect::<Vec<_>>());
    let spanned = hermite_basis(&rows.iter().map(|v| big(v)).collect::<Vec<_>>());
    ensure(invariants == spanned, || "the rank-5 basis does not span the w-invariant lattice".into())?;
    pic.restrict(group, &rows).map_err(err)
}

fn coords_in(basis: &[PicVector; 5], v: &PicVector) -> Result<Vec<i64>, String> {
    let rows: Vec<Vec<i64>> = basis.iter().map(|v| v.to_vec()).collect();
    GLattice::coordinates_in(&rows, v).ok_or_else(|| format!("{v:?} is not in the rank-5 lattice"))
}

pub fn check_generators(tables: &GeneratorTables, cert: &mut Certificate) -> Outcome {
    let s = s_group();
    let st = st_group();
    let m_s = rank5_module(&s, &tables.rank5_basis)?;
    let m_st = rank5_module(&st, &tables.rank5_basis)?;
    let phi_prime = tables.phi_prime.iter().map(|v| coords_in(&tables.rank5_basis, v)).collect::<Result<Vec<_>, _>>()?;
    let phi = tables.phi.iter().map(|v| coords_in(&tables.rank5_basis, v)).collect::<Result<Vec<_>, _>>()?;
    let phi_prime = Cochain::from_fn(&s, 1, |g| phi_prime[g[0].s as usize].clone());
    let phi = Cochain::from_fn(&st, 1, |g| phi[(g[0].s as usize + 3 - g[0].t as usize) % 3].clone());
    ensure(is_cocycle(&s, &m_s, &phi_prime), || "φ′ is not a cocycle".into())?;
    ensure(is_cocycle(&st, &m_st, &phi), || "φ is not a cocycle".into())?;
    for &g in s.elements() {
        ensure(phi.get(&st, &[g]) == phi_prime.get(&s, &[g]), || format!("φ({g}) ≠ φ′({g})"))?;
    }
    ensure(coboundary_witness(&s, &m_s, &phi_prime).map_err(err)?.is_none(), || "φ′ is a coboundary".into())?;
    ensure(coboundary_witness(&st, &m_st, &phi).map_err(err)?.is_none(), || "φ is a coboundary".into())?;
    cert.record("phi_prime_is_coboundary", json!(false));
    cert.record("phi_is_coboundary", json!(false));
    let tate = tate_h_minus1(&m_s.int_matrix(FieldAutomorphism::s()), 3).map_err(err)?;
    let factors: Vec<String> = tate.factors.iter().map(|f| f.to_string()).collect();
    cert.record("tate_factors", json!(factors));
    let expected: Vec<BigInt> = tables.tate_factors.iter().map(|&f| f.into()).collect();
    ensure(tate.factors == expected, || format!("Ĥ⁻¹ factors {factors:?}, expected {:?}", tables.tate_factors))?;
    let want = big(&coords_in(&tables.rank5_basis, &tables.tate_generator)?);
    let minus: Vec<BigInt> = want.iter().map(|x| -x).collect();
    let gen = &tate.generators[0];
    ensure(tate.same_class(gen, &want) || tate.same_class(gen, &minus), || {
        format!("Tate generator {gen:?} is not ±{:?} modulo im(σ − 1)", tables.tate_generator)
    })?;
    let bar_s = bar_cohomology(&s, &m_s, 1).map_err(err)?;
    ensure(bar_s == tate.factors, || format!("H¹(⟨s⟩) = {bar_s:?} but Ĥ⁻¹ = {:?}", tate.factors))?;
    let bar_st = bar_cohomology(&st, &m_st, 1).map_err(err)?;
    let bar_st_s: Vec<String> = bar_st.iter().map(|f| f.to_string()).collect();
    cert.record("h1_st_factors", json!(bar_st_s));
    let expected: Vec<BigInt> = tables.h1_factors.iter().map(|&f| f.into()).collect();
    ensure(bar_st == expected, || format!("H¹(⟨s, t⟩) factors {bar_st_s:?}, expected {:?}", tables.h1_factors))
}

pub fn check_theorem1(tables: &Theorem1Tables, cert: &mut Certificate) -> Outcome {
    let s = s_group();
    let phi_prime = phi_cochain(&s, &tables.phi_prime);
    for k in 0..3 {
        let class = divisor_class(&tables.lifts[k]).map_err(err)?;
        ensure(class == tables.phi_prime[k], || format!("lift {k} has class {class:?}, not {:?}", tables.phi_prime[k]))?;
    }
    // the plain lifts give a cocycle that is only cohomologous to the symbol
    let step1_pairs = (0..3).map(|k| (tables.phi_prime[k].to_vec(), tables.lifts[k].to_vec())).collect();
    let raw = connecting_to_d0(&s, &phi_prime, table_lift(step1_pairs)).map_err(err)?;
    let (n, cs, cs2) = normalized_theorem1_lift(&tables.lifts[1]).map_err(err)?;
    cert.record("normalizing_coefficients", json!(n));
    let pairs = vec![
        (tables.phi_prime[0].to_vec(), vec![0; 10]),
        (tables.phi_prime[1].to_vec(), cs.to_vec()),
        (tables.phi_prime[2].to_vec(), cs2.to_vec()),
    ];
    let boundary = connecting_to_d0(&s, &phi_prime, table_lift(pairs)).map_err(err)?;
    let functions = as_functions(&boundary).map_err(err)?;
    let (num, den) = tables.symbol;
    let f = &basic_function(num) / &basic_function(den);
    let module = Multiplicative::modulo_constants();
    let symbol = symbol_cocycle(&s, &module, FieldAutomorphism::s(), &f).map_err(err)?;
    cert.record("boundary", cochain_table_json(&s, &module, &functions));
    if let Some(i) = first_difference(&module, &functions, &symbol) {
        return Err(format!(
            "∂′φ′({}) = {}, symbol gives {}",
            spell(&arguments(&s, 2, i)),
            functions.value_at(i),
            symbol.value_at(i)
        ));
    }
    let d0 = d0_lattice(&s).map_err(err)?;
    let to_d0 = |c: &Cochain<Vec<i64>>| c.try_map(|d| d0_coordinates(d).map(|x| x.to_vec()).ok_or(()));
    let (Ok(raw0), Ok(norm0)) = (to_d0(&raw), to_d0(&boundary)) else {
        return Err("∂′φ′ leaves 𝒟₀".into());
    };
    let diff = Cochain::from_values(&s, 2, raw0.values().iter().zip(norm0.values()).map(|(a, b)| d0.sub(a, b)).collect());
    let witness = coboundary_witness(&s, &d0, &diff).map_err(err)?;
    ensure(witness.is_some(), || "the two lifts give non-cohomologous cocycles".into())?;
    cert.record("lift_change_witness", cochain_table_json(&s, &d0, &witness.expect("checked")));
    // a(i, j)·(D₂ − D₁) is a coboundary in 𝒟
    let div = divisor_lattice(&s).map_err(err)?;
    let dn = divisor_of_function(&f).map_err(err)?;
    let image = symbol_cocycle(&s, &div, FieldAutomorphism::s(), &dn.to_vec()).map_err(err)?;
    let b = coboundary_witness(&s, &div, &image).map_err(err)?.ok_or("the div-image of the symbol is not a coboundary")?;
    ensure(first_difference(&div, &differential(&s, &div, &b), &image).is_none(), || "d(witness) ≠ div-image".into())?;
    cert.record("div_witness", cochain_table_json(&s, &div, &b));
    // and the class of the witness in Pic is [φ′]
    let pic = pic_lattice(&s).map_err(err)?;
    let classes = b.try_map(|d| divisor_class(&d.as_slice().try_into().expect("rank 10")).map(|c| c.to_vec()));
    let classes = classes.map_err(|(_, e)| err(e))?;
    let delta = Cochain::from_values(&s, 1, classes.values().iter().zip(phi_prime.values()).map(|(a, b)| pic.sub(a, b)).collect());
    let w = coboundary_witness(&s, &pic, &delta).map_err(err)?;
    ensure(w.is_some(), || "the symbol does not map to [φ′]".into())?;
    cert.record("maps_to_phi_prime", json!(true));
    Ok(())
}

pub fn check_step1(tables: &Step1Tables, cert: &mut Certificate) -> Outcome {
    for k in 0..3 {
        let class = divisor_class(&tables.lifts[k]).map_err(err)?;
        ensure(class == tables.phi[k], || format!("lift {k} has class {class:?}, not {:?}", tables.phi[k]))?;
    }
    let c = step1_cocycles(&tables.phi, &tables.lifts).map_err(err)?;
    let g = &c.group;
    let div = divisor_lattice(g).map_err(err)?;
    let mult = Multiplicative::exact();
    ensure(is_cocycle(g, &pic_lattice(g).map_err(err)?, &c.phi), || "φ is not a cocycle".into())?;
    ensure(is_cocycle(g, &div, &c.partial), || "∂φ is not a cocycle".into())?;
    ensure(is_cocycle(g, &mult, &c.delta), || "δ∂φ is not a cocycle".into())?;
    let mut compared = 0;
    for i in 0..g.tuple_count(2) {
        let args = arguments(g, 2, i);
        let key = (args[0].s, args[0].t, (args[1].s + 3 - args[1].t) % 3);
        let expected = match tables.partial_phi.get(&key).ok_or_else(|| format!("no table entry for {key:?}"))? {
            None => [0; 10],
            Some(q) => divisor_of_function(&q.function()).map_err(err)?,
        };
        ensure(c.partial.value_at(i).as_slice() == expected, || {
            format!("∂φ({}) = {:?}, table gives {expected:?}", spell(&args), c.partial.value_at(i))
        })?;
        let reduced = [args[0], FieldAutomorphism::new(key.2 as i64, 0, 0)];
        ensure(c.partial.get(g, &reduced) == c.partial.value_at(i), || format!("reduction fails at {}", spell(&args)))?;
        compared += 1;
    }
    cert.record("partial_phi_entries_compared", json!(compared));
    let mut compared = 0;
    for i in 0..g.tuple_count(3) {
        let args = arguments(g, 3, i);
        let c3 = (args[2].s + 3 - args[2].t) % 3;
        let expected = if args[0].s == 0 || args[1].is_identity() || c3 == 0 {
            MonomialFunction::one()
        } else {
            let key = (args[0].s, (args[1].s, args[1].t), c3);
            tables.delta_partial_phi.get(&key).ok_or_else(|| format!("no table entry for {key:?}"))?.function()
        };
        ensure(mult.equal(c.delta.value_at(i), &expected), || {
            format!("δ∂φ({}) = {}, table gives {expected}", spell(&args), c.delta.value_at(i))
        })?;
        compared += 1;
    }
    cert.record("delta_partial_phi_entries_compared", json!(compared));
    cert.record("partial_phi", cochain_table_json(g, &div, &c.partial));
    Ok(())
}

pub fn check_steps2to4(tables: &Steps2to4Tables, cert: &mut Certificate) -> Outcome {
    let full = FiniteGroup::full();
    let st = st_group();
    let t = t_group();
    let mult = Multiplicative::exact();
    let mu3 = Mu3::new();
    let step1 = step1_cocycles(&REFERENCE_PHI, &REFERENCE_LIFTS).map_err(err)?;
    let inflated = inflate(&st, &full, &step1.delta);
    let psi = reduced_2_cochain(&full, &tables.psi);
    let d_psi = d_multiplicative(&full, &psi);
    let cubed = cube(&inflated);
    if let Some(i) = first_difference(&mult, &d_psi, &cubed) {
        return Err(format!(
            "dψ({}) = {}, but (δ∂φ)³ = {}",
            spell(&arguments(&full, 3, i)),
            d_psi.value_at(i),
            cubed.value_at(i)
        ));
    }
    cert.record("d_psi_triples_compared", json!(full.tuple_count(3)));
    let psi_tilde = reduced_2_cochain(&full, &tables.psi_tilde);
    if let Some(i) = first_difference(&mult, &cube(&psi_tilde), &psi) {
        return Err(format!("ψ̃³ ≠ ψ at ({})", spell(&arguments(&full, 2, i))));
    }
    let phi = big_phi(&full, &psi_tilde).map_err(err)?;
    ensure(is_cocycle(&full, &mu3, &phi), || "Φ is not a 3-cocycle".into())?;
    let d_psi_tilde = d_multiplicative(&full, &psi_tilde);
    let ratio = quotient(&full, &mult, &inflated, &d_psi_tilde);
    for i in 0..full.tuple_count(3) {
        let e = ratio.value_at(i).constant_value().and_then(|c| c.root_of_unity_exponent());
        ensure(e == Some(*phi.value_at(i)), || {
            format!("Φ({}) ≠ δ∂φ/dψ̃ = {}", spell(&arguments(&full, 3, i)), ratio.value_at(i))
        })?;
    }
    cert.record("phi_is_3_cocycle", json!(true));
    // r̄Φ on ⟨s, t⟩, valued in Hom(⟨w⟩, μ₃) ≅ Z/3 via (w ↦ ζ) ↦ 1
    for &g1 in st.elements() {
        for &g2 in st.elements() {
            let e = *phi.get(&full, &[FieldAutomorphism::w(), g1, g2]);
            for k in 0..3 {
                let v = *phi.get(&full, &[FieldAutomorphism::w().pow(k), g1, g2]);
                ensure(v == (e * k as u8) % 3, || format!("Φ(w^{k}, {g1}, {g2}) is not a homomorphism in w"))?;
            }
        }
    }
    let r_phi = r_bar_phi(&full, &st, &phi);
    ensure(is_cocycle(&st, &mu3, &r_phi), || "r̄Φ is not a 2-cocycle".into())?;
    cert.record("r_phi", cochain_table_json(&st, &mu3, &r_phi));
    let big_psi_c = big_psi(&st, &tables.big_psi);
    ensure(is_cocycle(&st, &mu3, &big_psi_c), || "Ψ is not a 2-cocycle".into())?;
    let diff = quotient(&st, &mu3, &r_phi, &big_psi_c);
    let link = coboundary_witness(&st, &mu3, &diff).map_err(err)?;
    ensure(link.is_some(), || "Ψ is not cohomologous to r̄Φ".into())?;
    cert.record("r_phi_minus_psi_witness", cochain_table_json(&st, &mu3, &link.expect("checked")));
    let trivial = coboundary_witness(&st, &mu3, &big_psi_c).map_err(err)?;
    ensure(trivial.is_none(), || "Ψ is a coboundary over F₃".into())?;
    cert.record("psi_is_coboundary", json!(false));
    // r̄Ψ(t^j)(s^i) = Ψ(s^i, t^j)
    for i in 0..3 {
        for &tj in t.elements() {
            let si = FieldAutomorphism::s().pow(i);
            let v = *big_psi_c.get(&st, &[si, tj]);
            let e = *big_psi_c.get(&st, &[FieldAutomorphism::s(), tj]);
            ensure(v == (e * i as u8) % 3, || format!("Ψ(·, {tj}) is not a homomorphism on ⟨s⟩"))?;
        }
    }
    let r_psi = r_bar_psi(&st, &t, &big_psi_c);
    ensure(is_cocycle(&t, &mu3, &r_psi), || "r̄Ψ is not a cocycle".into())?;
    let at_t = *r_psi.get(&t, &[FieldAutomorphism::t()]);
    cert.record("r_psi_t_s", json!(at_t));
    ensure(at_t == tables.r_psi_t_s, || format!("r̄Ψ(t̄)(s) = ζ^{at_t}, expected ζ^{}", tables.r_psi_t_s))?;
    ensure(coboundary_witness(&t, &mu3, &r_psi).map_err(err)?.is_none(), || "[r̄Ψ] = 0".into())?;
    Ok(())
}
