//! One handler per subcommand. Handlers read an optional dataset, fall back
//! to a seeded random instance, and return results plus invariant checks.

use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

use serde_json::{json, Value};

use super::dataset::{load_dataset, Dataset};
use super::{CliError, Context, InvariantCheck, Outcome};
use crate::duality::{self, Hypersurface};
use crate::exact::projective::{projective_equivalence, projective_points};
use crate::exact::{linalg, Field, PrimeField, ProjPoint, SparseForm};
use crate::nets::{self, Octad, QuadricNet};
use crate::samples;
use crate::theta;
use crate::verify;
use crate::weyl::{self, LedgerMarking, WeylElement};
use crate::Error;

type Handler = Result<Outcome, CliError>;

fn outcome(results: Value, invariants: Vec<InvariantCheck>) -> Handler {
    Ok(Outcome { results, invariants, timings: BTreeMap::new() })
}

fn dataset(ctx: &Context) -> Result<Option<(Dataset, String)>, CliError> {
    match &ctx.input {
        None => Ok(None),
        Some(path) => Ok(Some((load_dataset(path)?, path.display().to_string()))),
    }
}

fn strings(f: &PrimeField, pts: &[ProjPoint<PrimeField>]) -> Vec<Vec<String>> {
    pts.iter().map(|p| p.to_strings(f)).collect()
}

/// The net from `--input`, or the net of a seeded random smooth octad.
fn net_and_octad(ctx: &Context) -> Result<(QuadricNet<PrimeField>, Octad<PrimeField>, &'static str), CliError> {
    match dataset(ctx)? {
        Some((d, src)) => {
            let net = d.to_net(&src)?;
            let octad = nets::base_locus(&net)?;
            Ok((net, octad, "input"))
        }
        None => {
            let mut rng = samples::rng(ctx.config.seed, 1);
            let (net, octad, _) = samples::random_smooth_octad(&ctx.field, &mut rng);
            Ok((net, octad, "random"))
        }
    }
}

pub(super) fn octad_build(ctx: &Context) -> Handler {
    let (net, octad, origin) = net_and_octad(ctx)?;
    let f = *net.field();
    let rank = nets::self_association_rank(&f, octad.points());
    let certified = nets::smoothness_certificate(&octad);
    outcome(
        json!({
            "origin": origin,
            "net": Dataset::from_net(&net),
            "octad": Dataset::from_points(&f, octad.points()),
            "self_association_rank": rank,
            "smoothness_certificate": certified,
        }),
        vec![InvariantCheck::new("eight_simple_base_points", octad.points().len() == 8), InvariantCheck::new("self_associated", rank == 7)],
    )
}

pub(super) fn octad_project(ctx: &Context, center: usize) -> Handler {
    let octad = match dataset(ctx)? {
        Some((d, src)) => d.to_octad(&src)?,
        None => net_and_octad(ctx)?.1,
    };
    let f = *octad.field();
    let heptad = nets::project_octad(&octad, center)?;
    // the plane octad lists the seven projected points first and the centre last
    let mut reordered: Vec<_> = (0..8).filter(|&i| i != center).map(|i| octad.points()[i].clone()).collect();
    reordered.push(octad.points()[center].clone());
    let (general, round_trip) = match nets::octad_from_plane(&f, &heptad) {
        Ok(back) => (true, InvariantCheck::new("round_trip", projective_equivalence(&f, &reordered, back.points()).is_some())),
        // special octads (such as the cube) project to special heptads
        Err(Error::DegenerateConfiguration(why)) => {
            (false, InvariantCheck::with_detail("round_trip", true, format!("not applicable: {why}")))
        }
        Err(e) => return Err(e.into()),
    };
    outcome(
        json!({
            "center": center,
            "octad": Dataset::from_points(&f, octad.points()),
            "heptad": Dataset::from_points(&f, &heptad),
            "heptad_general_position": general,
        }),
        vec![round_trip],
    )
}

pub(super) fn octad_from_plane(ctx: &Context) -> Handler {
    let (f, heptad, octad) = match dataset(ctx)? {
        Some((d, src)) => {
            let (f, pts) = d.to_points(&src, 2)?;
            let octad = nets::octad_from_plane(&f, &pts)?;
            (f, pts, octad)
        }
        None => {
            let f = ctx.field;
            let mut rng = samples::rng(ctx.config.seed, 3);
            loop {
                let pts: Vec<_> = (0..7).map(|_| samples::random_point(&f, 2, &mut rng)).collect();
                match nets::octad_from_plane(&f, &pts) {
                    Ok(o) => break (f, pts, o),
                    Err(Error::DegenerateConfiguration(_)) => continue,
                    Err(e) => return Err(e.into()),
                }
            }
        }
    };
    let rank = nets::self_association_rank(&f, octad.points());
    let back = nets::project_octad(&octad, 7)?;
    outcome(
        json!({
            "heptad": Dataset::from_points(&f, &heptad),
            "octad": Dataset::from_points(&f, octad.points()),
            "self_association_rank": rank,
        }),
        vec![
            InvariantCheck::new("self_associated", rank == 7),
            InvariantCheck::new("round_trip", projective_equivalence(&f, &heptad, &back).is_some()),
        ],
    )
}

pub(super) fn hessian(ctx: &Context) -> Handler {
    let (net, octad, origin) = net_and_octad(ctx)?;
    let h = nets::hessian_quartic(&net)?;
    let certified = nets::smoothness_certificate(&octad);
    let singular = duality::singular_points(&Hypersurface::new(h.clone())?)?;
    let f = net.field();
    outcome(
        json!({
            "origin": origin,
            "hessian": h.to_string(),
            "form": Dataset::from_form(&h),
            "smoothness_certificate": certified,
            "rational_singular_points": strings(f, &singular),
        }),
        vec![
            InvariantCheck::new("quartic", h.degree() == 4 && !h.is_zero()),
            InvariantCheck::with_detail(
                "smooth_when_certified",
                !certified || singular.is_empty(),
                if certified { "certificate holds" } else { "certificate does not hold; nothing to check" },
            ),
        ],
    )
}

pub(super) fn bitangents(ctx: &Context) -> Handler {
    let (net, octad, origin) = net_and_octad(ctx)?;
    let f = *net.field();
    let ext = f.extension().expect("prime fields have a quadratic extension");
    let h = nets::hessian_quartic(&net)?;
    let mut rows = Vec::new();
    let mut squares = 0;
    let mut lines = HashSet::new();
    for i in 0..8 {
        for j in i + 1..8 {
            let (line, cert) = nets::bitangent_with_hessian(&net, &h, &octad, i, j)?;
            let square = cert.root.g.mul(&cert.root.g).scale(&cert.root.c) == cert.restricted;
            squares += square as usize;
            let contacts: Vec<Vec<String>> =
                cert.contacts.iter().flatten().map(|p| p.to_strings(&ext)).collect();
            rows.push(json!({ "pair": [i, j], "line": line.to_strings(&f), "square": square, "contacts": contacts }));
            lines.insert(line);
        }
    }
    outcome(
        json!({ "origin": origin, "hessian": h.to_string(), "bitangents": rows }),
        vec![InvariantCheck::new("square_certificates", squares == 28), InvariantCheck::new("distinct_lines", lines.len() == 28)],
    )
}

pub(super) fn steinerian(ctx: &Context) -> Handler {
    let (net, octad, origin) = net_and_octad(ctx)?;
    let f = *net.field();
    let h = nets::hessian_quartic(&net)?;
    let mut secants = 0;
    for i in 0..8 {
        for j in i + 1..8 {
            let (_, cert) = nets::bitangent_with_hessian(&net, &h, &octad, i, j)?;
            secants += nets::secant_check_with(&net, &octad, i, j, &cert)? as usize;
        }
    }
    let on_curve: Vec<_> =
        projective_points(&f, 2)?.filter(|u| f.is_zero(&h.eval(u.coords()))).take(ctx.config.samples).collect();
    let mut points = Vec::new();
    let mut kernels_ok = true;
    let mut corank_two = 0;
    for u in &on_curve {
        match nets::steinerian_point(&net, u) {
            Ok(s) => {
                let q = net.quadric_at(u.coords());
                kernels_ok &= linalg::mat_vec(&f, &q, s.coords()).iter().all(|x| f.is_zero(x));
                points.push(json!({ "hessian_point": u.to_strings(&f), "steinerian": s.to_strings(&f) }));
            }
            Err(Error::CorankTwo) => corank_two += 1,
            Err(e) => return Err(e.into()),
        }
    }
    outcome(
        json!({ "origin": origin, "secant_checks_passed": secants, "points": points, "corank_two": corank_two }),
        vec![InvariantCheck::new("secant_checks", secants == 28), InvariantCheck::new("kernel_points", kernels_ok)],
    )
}

fn input_hypersurface(ctx: &Context) -> Result<(Hypersurface<PrimeField>, &'static str), CliError> {
    match dataset(ctx)? {
        Some((d, src)) => Ok((Hypersurface::new(d.to_form(&src)?)?, "input")),
        None => {
            let mut rng = samples::rng(ctx.config.seed, 4);
            Ok((samples::random_smooth_plane_quartic(&ctx.field, &mut rng)?, "random"))
        }
    }
}

pub(super) fn dual_fit(ctx: &Context, bidual: bool) -> Handler {
    let (h, origin) = input_hypersurface(ctx)?;
    let c = &ctx.config;
    let mut timings = BTreeMap::new();
    let start = Instant::now();
    let fit = duality::dual_interpolate(&h, c.degree_bound, c.samples, c.seed)?;
    timings.insert("fit".to_string(), start.elapsed().as_secs_f64());
    let last = fit.witness.last();
    let unique = last.is_some_and(|w| w.rank + 1 == w.monomials);
    let minimal = fit.witness.iter().filter(|w| w.degree < fit.degree).all(|w| w.rank == w.monomials);
    let mut results = json!({
        "origin": origin,
        "form": h.form().to_string(),
        "dual_degree": fit.degree,
        "dual": fit.dual.to_string(),
        "dual_form": Dataset::from_form(&fit.dual),
        "distinct_images": fit.distinct_images,
        "witness": fit.witness,
    });
    let mut invariants = vec![InvariantCheck::new("unique_fit", unique), InvariantCheck::new("minimal_degree", minimal)];
    if bidual {
        let start = Instant::now();
        let stats = duality::biduality_stats(&h, &fit.dual, 50, c.seed)?;
        timings.insert("biduality".to_string(), start.elapsed().as_secs_f64());
        results["biduality"] = json!({ "tested": stats.tested, "agreed": stats.agreed });
        invariants.push(InvariantCheck::new("biduality", stats.passed()));
    }
    Ok(Outcome { results, invariants, timings })
}

pub(super) fn nodal_search(ctx: &Context, target: usize) -> Handler {
    let f = &ctx.field;
    let family = duality::heisenberg_family(f)?;
    let hits = duality::nodal_family_search(&family, target)?;
    let mut verified = true;
    for t in hits.iter().take(3) {
        let member = Hypersurface::new(family.member(t))?;
        let sing = duality::singular_points(&member)?;
        verified &= sing.len() == target;
        if target > 0 {
            verified &= sing.iter().all(|p| duality::is_node(&member, p).unwrap_or(false));
        }
    }
    let shown: Vec<Vec<String>> = hits.iter().take(20).map(|t| t.iter().map(|x| f.to_scalar(x).to_string()).collect()).collect();
    outcome(
        json!({
            "family": "x^4+y^4+z^4+w^4 + t1(x²w²+y²z²) + t2(y²w²+x²z²) + t3(z²w²+x²y²) + t4·xyzw",
            "target": target,
            "members_scanned": f.modulus().pow(4),
            "hits": hits.len(),
            "first_hits": shown,
        }),
        vec![InvariantCheck::with_detail("hits_verified", verified, "singular points recounted for up to three hits")],
    )
}

fn input_pair(ctx: &Context) -> Result<(SparseForm<PrimeField>, SparseForm<PrimeField>, &'static str), CliError> {
    match dataset(ctx)? {
        Some((d, src)) => {
            let (a, b) = d.to_form_pair(&src)?;
            Ok((a, b, "input"))
        }
        None => {
            let mut rng = samples::rng(ctx.config.seed, 5);
            let (a, b) = samples::random_pencil_pair(&ctx.field, &mut rng)?;
            Ok((a, b, "random pencil pair"))
        }
    }
}

pub(super) fn tangency(ctx: &Context) -> Handler {
    let (a, b, origin) = input_pair(ctx)?;
    let f = *a.field();
    match duality::tangency_divisor(&a, &b, ctx.config.seed) {
        Ok(rep) => {
            let square = rep.root.g.mul(&rep.root.g).scale(&rep.root.c) == rep.resultant;
            let contacts: Vec<Value> =
                rep.contacts.iter().map(|(p, m)| json!({ "point": p.to_strings(&f), "multiplicity": m })).collect();
            let even = rep.contacts.iter().all(|(_, m)| m % 2 == 0);
            outcome(
                json!({
                    "origin": origin,
                    "first": a.to_string(),
                    "second": b.to_string(),
                    "resultant": rep.resultant.to_string(),
                    "square_root": rep.root.g.to_string(),
                    "delta_degree": rep.delta_degree,
                    "rational_delta_degree": rep.rational_delta_degree(),
                    "contacts": contacts,
                }),
                vec![
                    InvariantCheck::new("everywhere_tangent", true),
                    InvariantCheck::new("square_certificate", square),
                    InvariantCheck::new("even_contacts", even),
                ],
            )
        }
        Err(Error::NotEverywhereTangent(why)) => outcome(
            json!({ "origin": origin, "first": a.to_string(), "second": b.to_string() }),
            vec![InvariantCheck::with_detail("everywhere_tangent", false, why)],
        ),
        Err(e) => Err(e.into()),
    }
}

pub(super) fn weyl_counts(_ctx: &Context) -> Handler {
    let counts = verify::weyl_counts();
    let rules = verify::rule_table();
    let d = &counts.details;
    let mut results = d.clone();
    results["rule_table_matches"] = rules.details["matches"].clone();
    for key in ["weyl_order", "sym8_order", "index"] {
        if let Some(n) = d[key].as_str().and_then(|s| s.parse::<u64>().ok()) {
            results[key] = n.into();
        }
    }
    outcome(
        results,
        vec![InvariantCheck::new("counts", counts.passed), InvariantCheck::new("rule_table", rules.passed)],
    )
}

pub(super) fn weyl_fiber(ctx: &Context) -> Handler {
    let mut rng = samples::rng(ctx.config.seed, 6);
    let mut markings = vec![LedgerMarking::identity()];
    markings.extend((0..ctx.config.samples).map(|_| LedgerMarking::random(&mut rng, 40)));
    let mut sizes = Vec::new();
    let mut partners = true;
    for m in &markings {
        let fiber = weyl::hessian_fiber(m);
        let forms: HashSet<_> = fiber.iter().map(LedgerMarking::canonical_form).collect();
        let w0m = m.transformed(&WeylElement::w0()).canonical_form();
        partners &= forms.contains(&w0m) && w0m != m.canonical_form();
        sizes.push(fiber.len());
    }
    outcome(
        json!({ "markings": markings.len(), "fiber_sizes": sizes }),
        vec![
            InvariantCheck::new("degree_72", sizes.iter().all(|&s| s == 72)),
            InvariantCheck::new("polar_partner_in_fiber", partners),
        ],
    )
}

pub(super) fn theta_counts(_ctx: &Context) -> Handler {
    let images: HashSet<_> =
        weyl::positive_roots().iter().map(|(_, a)| theta::res(a)).collect::<crate::Result<_>>()?;
    let bijective = images.len() == 63 && !images.contains(&theta::F2Vector::ZERO);
    let q0 = theta::parity_form()?;
    let (odd, even) = theta::theta_chars()?;
    let r = theta::Restriction::standard();
    let sym8 = weyl::sym8_generators().iter().all(|(_, s)| theta::form_shift(&r.sp_image(s)).is_zero());
    outcome(
        json!({
            "res_bijective": bijective,
            "q0_diagonal": theta::F2Vector(q0.diagonal()).to_string(),
            "q0_arf": q0.arf(),
            "odd": odd.len(),
            "even": even.len(),
            "symplectic_basis": r.pairs().iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
        }),
        vec![
            InvariantCheck::new("res_bijective", bijective),
            InvariantCheck::new("q0_even", q0.arf() == 0),
            InvariantCheck::new("counts_28_36", (odd.len(), even.len()) == (28, 36)),
            InvariantCheck::new("sym8_fixes_q0", sym8),
        ],
    )
}

pub(super) fn theta_aronhold(ctx: &Context) -> Handler {
    let sets = theta::aronhold_enumerate();
    let known: HashSet<_> = sets.iter().copied().collect();
    let gens = weyl::weyl_generators();
    let mut rng = samples::rng(ctx.config.seed, 7);
    let mut equivariant = true;
    use rand::Rng;
    for _ in 0..ctx.config.samples {
        let mut g = WeylElement::identity();
        for _ in 0..20 {
            g = gens[rng.gen_range(0..gens.len())].1.mul(&g);
        }
        let set = sets[rng.gen_range(0..sets.len())];
        let mut image = set.map(|v| theta::transport(&g, &v));
        image.sort();
        equivariant &= known.contains(&image);
    }
    outcome(
        json!({
            "count": sets.len(),
            "first": sets.first().map(|s| s.iter().map(|v| v.to_string()).collect::<Vec<_>>()),
            "equivariance_samples": ctx.config.samples,
        }),
        vec![InvariantCheck::new("count_288", sets.len() == 288), InvariantCheck::new("w_equivariant", equivariant)],
    )
}

pub(super) fn verify_all(ctx: &Context) -> Handler {
    let seed = ctx.config.seed;
    let first = verify::run_checks(seed);
    let second = verify::run_checks(seed);
    let a: Vec<_> = first.iter().map(|t| t.criterion.clone()).collect();
    let b: Vec<_> = second.iter().map(|t| t.criterion.clone()).collect();
    let mut criteria = a.clone();
    criteria.push(verify::determinism(&a, &b));
    let invariants = criteria
        .iter()
        .map(|c| InvariantCheck::with_detail(&format!("criterion_{}", c.id), c.passed, c.title.clone()))
        .collect();
    let timings = first.iter().map(|t| (format!("criterion_{}", t.criterion.id), t.elapsed.as_secs_f64())).collect();
    Ok(Outcome { results: json!({ "seed": seed, "criteria": criteria }), invariants, timings })
}
