//! Commands behind the `jonq` binary. Each returns a [`Report`]; the binary
//! only parses arguments, prints and picks the exit code.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::birational::VerifiedCremona;
use crate::error::{Error, Result};
use crate::fixtures::{self, Profile};
use crate::groebner::Limits;
use crate::implicitize::{
    classify_case, degree_report, implicitize, inclusion_case_equivalence, nzd_case, oracle_implicitize_limited,
    syzygetic_polynomials, verify_inverse_representative, CaseTag, ImplicitMonoid, JonquieresData,
};
use crate::instance::InstanceFile;
use crate::poly::{gcd, Polynomial};
use crate::rees::{
    downgraded_rees_ideal, in_rees_kernel, iterated_downgrades, monoid_association, random_rees_member, rees_ideal,
    saturation_identities, ReesRole,
};
use crate::report::{is_budget, Report, Verdict};
use crate::syzygies::{
    colon_law, conductor_data, default_syzygy_bound, format_reg, mapping_cone_matrix, regularity_bound_checks,
    regularity_dim1, syzygy_matrix, verify_syzygy_generation,
};

/// Default S-pair budget per basis computation.
pub const DEFAULT_MAX_PAIRS: usize = 200_000;
/// Default number of random Rees-ideal members downgraded by `rees`.
pub const DEFAULT_MEMBERS: usize = 20;
/// Default instance count of `selftest`.
pub const DEFAULT_SELFTEST_COUNT: usize = 20;

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct Options {
    pub oracle: bool,
    pub seed: u64,
    /// Syzygy verification bound; `None` means the default of the matrix.
    pub deg_bound: Option<u32>,
    pub jobs: usize,
    pub limits: Limits,
    pub members: usize,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            oracle: false,
            seed: 0,
            deg_bound: None,
            jobs: 1,
            limits: Limits::pairs(DEFAULT_MAX_PAIRS),
            members: DEFAULT_MEMBERS,
            timings: false,
        }
    }
}

/// Exit status for an error: verification failures are failures (1),
/// everything else is an input error (2).
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotMutuallyInverse { .. } | Error::DegenerateComposition { .. } | Error::Verification(_) => 1,
        _ => 2,
    }
}

/// Exit status for a finished report.
pub fn report_exit_code(r: &Report) -> i32 {
    i32::from(r.has_failure())
}

fn poly_list(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

fn twist_list(ts: &[i64]) -> String {
    ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
}

/// Runs `check`; budget errors become skips and other errors failures.
fn guarded(r: &mut Report, key: &str, check: impl FnOnce(&mut Report) -> Result<()>) {
    let mut sub = Report::new();
    match check(&mut sub) {
        Ok(()) => r.merge(key, sub),
        Err(e) if is_budget(&e) => {
            r.merge(key, sub);
            r.verdict(format!("{key}.status"), Verdict::Skipped("budget".into()));
        }
        Err(e) => {
            r.merge(key, sub);
            r.verdict(format!("{key}.status"), Verdict::Fails(e.to_string()));
        }
    }
}

pub fn cremona_report(c: &VerifiedCremona) -> Report {
    let mut r = Report::new();
    r.set("n", c.n());
    r.set("degree", c.forward.degree());
    r.set("inverse_degree", c.inverse.degree());
    r.set("target_factor", &c.target_factor);
    r.set("target_factor_degree", c.target_factor.total_degree().unwrap_or(0));
    r.set("source_factor", &c.source_factor);
    r.set("source_factor_degree", c.source_factor.total_degree().unwrap_or(0));
    r.verdict("verified", Verdict::Holds);
    r.verdict(
        "degree_identity",
        Verdict::from_bool(c.degree_identity_holds(), "deg D != deg(G) deg(G^-1) - 1"),
    );
    r
}

pub fn cmd_verify_cremona(inst: &InstanceFile) -> Result<Report> {
    let mut r = Report::new();
    match inst.verified() {
        Ok(c) => r.merge("cremona", cremona_report(&c)),
        Err(e @ (Error::NotMutuallyInverse { .. } | Error::DegenerateComposition { .. })) => {
            r.verdict("cremona.verified", Verdict::Fails(e.to_string()));
        }
        Err(e) => return Err(e),
    }
    Ok(r)
}

/// `F` has `y_{n+1}`-degree one with coprime coefficients.
pub fn monoid_shape_holds(p: &JonquieresData, monoid: &ImplicitMonoid) -> bool {
    let last = p.extended_target().len() - 1;
    let coeffs = monoid.f.coefficients_in(last);
    coeffs.len() == 2 && gcd(&coeffs[0], &coeffs[1]).is_constant()
}

pub fn implicitize_report(p: &JonquieresData, opts: &Options) -> Result<Report> {
    let mut r = Report::new();
    r.set("instance.f", p.f());
    r.set("instance.g", p.g());
    let monoid = implicitize(p)?;
    r.set("monoid.F", &monoid.f);
    r.set("monoid.delta", monoid.delta);
    r.set("monoid.F_delta", &monoid.f_delta);
    r.set("monoid.F_delta_minus_1", &monoid.f_delta_minus_1);
    r.set(
        "monoid.stripped_gcd",
        monoid.stripped_gcd.as_ref().map_or("1".to_string(), |q| q.to_string()),
    );
    r.verdict(
        "monoid.shape",
        Verdict::from_bool(monoid_shape_holds(p, &monoid), "not a monoid with coprime coefficients"),
    );

    let deg = degree_report(p, &monoid)?;
    r.set("degree.actual", deg.actual);
    r.set("degree.via_g", deg.via_g);
    r.set("degree.via_f", deg.via_f);
    r.set("degree.upper_bound", deg.upper_bound);
    r.set("degree.evaluated_coprime", deg.evaluated_coprime);
    r.verdict(
        "degree.formulas_agree",
        Verdict::from_bool(
            deg.formulas_agree(),
            format!("actual {}, via g {}, via f {}", deg.actual, deg.via_g, deg.via_f),
        ),
    );
    r.verdict(
        "degree.upper_bound_holds",
        Verdict::from_bool(
            i64::from(deg.actual) <= deg.upper_bound,
            "deg F exceeds deg(g) deg(G^-1)",
        ),
    );
    match (deg.window, deg.window_holds()) {
        (Some((lo, hi)), Some(ok)) => {
            r.set("degree.window", format!("{lo}..={hi}"));
            r.verdict(
                "degree.window_holds",
                Verdict::from_bool(ok, "deg F outside the window"),
            );
            r.set("degree.strict_upper", deg.strict_upper_holds().unwrap_or(false));
        }
        _ => r.verdict(
            "degree.window_holds",
            Verdict::Skipped("evaluations not coprime".into()),
        ),
    }

    let case = classify_case(p)?;
    r.set("case.tag", case.as_str());

    let syz = syzygetic_polynomials(p)?;
    r.set("syzygetic.count", syz.len());
    for (j, s) in syz.iter().enumerate() {
        r.set(format!("syzygetic.{j}.conductor"), &s.conductor);
        r.set(format!("syzygetic.{j}.polynomial"), &s.polynomial);
        r.set(
            format!("syzygetic.{j}.degree"),
            s.polynomial.total_degree().unwrap_or(0),
        );
        r.set(format!("syzygetic.{j}.extraneous_factor"), &s.extraneous_factor);
    }
    if case == CaseTag::Inclusion {
        r.verdict(
            "syzygetic.unique",
            Verdict::from_bool(syz.len() == 1, "inclusion case with several conductors"),
        );
    }

    r.verdict(
        "representative",
        Verdict::from_bool(
            verify_inverse_representative(p, &monoid)?,
            "2x2 minors do not vanish mod F",
        ),
    );

    let inc = inclusion_case_equivalence(p)?;
    r.set("inclusion.applicable", inc.applicable);
    r.set("inclusion.g_in_ideal", inc.g_in_ideal);
    r.set("inclusion.degree_condition", inc.degree_condition);
    r.verdict(
        "inclusion.equivalence",
        if inc.applicable {
            Verdict::from_bool(inc.holds(), "the two sides disagree")
        } else {
            Verdict::Skipped("evaluations not coprime".into())
        },
    );

    if case == CaseTag::NonZeroDivisor {
        let nzd = nzd_case(p)?;
        r.set("nzd.candidate", &nzd.candidate);
        r.set("nzd.principal_equal", nzd.principal_equal);
        r.set("nzd.coprime", nzd.coprime);
        r.set("nzd.degree_equal", nzd.degree_equal);
        r.verdict(
            "nzd.consistent",
            Verdict::from_bool(nzd.consistent(), "conditions disagree"),
        );
        r.verdict(
            "nzd.degree_bound",
            Verdict::from_bool(nzd.degree_bound, "deg F too large"),
        );
    }

    if opts.oracle {
        match oracle_implicitize_limited(&p.parametrization(), p.extended_target(), p.limits()) {
            Ok(o) => {
                r.set("oracle.F", o.canonical());
                r.verdict(
                    "oracle.agrees",
                    Verdict::from_bool(o.is_scalar_multiple_of(&monoid.f), "oracle and formula differ"),
                );
            }
            Err(e) if is_budget(&e) => r.verdict("oracle.agrees", Verdict::Skipped("budget".into())),
            Err(e) => return Err(e),
        }
    }
    Ok(r)
}

pub fn cmd_implicitize(inst: &InstanceFile, opts: &Options) -> Result<Report> {
    let p = inst.jonquieres(opts.limits)?;
    let start = Instant::now();
    let mut r = implicitize_report(&p, opts)?;
    if opts.timings {
        r.set("timing.implicitize_ms", start.elapsed().as_millis());
    }
    Ok(r)
}

/// `φ` twist bound: the Cremona regularity bound plus `d + 2`.
pub fn phi_twist_bound(p: &JonquieresData) -> u32 {
    let (n, d) = (p.n() as u32, p.d());
    n * (d - 1) + d + 1
}

pub fn analyze_report(p: &JonquieresData, opts: &Options) -> Result<Report> {
    let mut r = Report::new();
    let i = p.base_ideal();

    guarded(&mut r, "colon", |r| {
        r.verdict(
            "law",
            Verdict::from_bool(colon_law(&i, p.f(), p.g())?, "If:g != (I:g)f"),
        );
        Ok(())
    });

    guarded(&mut r, "cone", |r| {
        let data = conductor_data(&i, p.g())?;
        r.set("conductor.tag", data.tag.as_str());
        r.set("conductor.generators", poly_list(&data.conductors));
        r.set(
            "conductor.degrees",
            data.degrees.iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
        );
        let phi = syzygy_matrix(i.generators(), phi_twist_bound(p))?;
        r.set("phi.columns", phi.ncols());
        r.set("phi.col_twists", twist_list(phi.col_twists()));
        let psi = match mapping_cone_matrix(i.generators(), &phi, p.f(), p.g(), &data) {
            Ok(m) => m,
            Err(Error::Verification(why)) => {
                r.verdict("psi.annihilates", Verdict::Fails(why));
                return Ok(());
            }
            Err(e) => return Err(e),
        };
        r.verdict("psi.annihilates", Verdict::Holds);
        r.set("psi.rows", psi.nrows());
        r.set("psi.columns", psi.ncols());
        r.set("psi.row_twists", twist_list(psi.row_twists()));
        r.set("psi.col_twists", twist_list(psi.col_twists()));
        let j_gens = p.jonquieres_ideal().generators().to_vec();
        let bound = opts.deg_bound.unwrap_or_else(|| default_syzygy_bound(&psi));
        let check = verify_syzygy_generation(&j_gens, &psi, bound)?;
        r.set("syzygy.bound", bound);
        r.set(
            "syzygy.degrees",
            check
                .degrees
                .iter()
                .map(|(mu, k, s)| format!("{mu}:{k}/{s}"))
                .collect::<Vec<_>>()
                .join(" "),
        );
        r.verdict(
            "syzygy.generation",
            Verdict::from_bool(
                check.holds(),
                match check.first_failure() {
                    Some(mu) => format!("spans differ in degree {mu}"),
                    None => format!("columns {:?} are not syzygies", check.non_syzygy_columns),
                },
            ),
        );
        Ok(())
    });

    guarded(&mut r, "regularity", |r| {
        let (dim, _) = i.dim_and_codim()?;
        r.set("dim", dim);
        if dim == 1 && i.generators().len() == p.n() + 1 {
            let reg = regularity_dim1(&i, p.d(), opts.seed)?;
            r.set("reg", format_reg(reg.reg));
            r.set("beg_sat", reg.beg_sat.map_or("inf".to_string(), |b| b.to_string()));
            r.set("beg_link", reg.beg_link.map_or("inf".to_string(), |b| b.to_string()));
            r.set("alpha", poly_list(&reg.alpha));
            r.set("link_contains_ideal", reg.link_contains_ideal);
            r.set("hilbert_reg", format_reg(reg.hilbert_reg));
            r.verdict(
                "formula_matches_hilbert",
                Verdict::from_bool(reg.reg == reg.hilbert_reg, "formula and Hilbert function disagree"),
            );
        } else {
            r.verdict("formula_matches_hilbert", Verdict::Skipped(format!("dim(R/I) = {dim}")));
        }
        let data = regularity_bound_checks(p, opts.seed)?;
        if let Some(reg) = data.reg_i {
            r.set("reg_i", format_reg(reg));
        }
        if let Some(reg) = data.reg_j {
            r.set("reg_j", format_reg(reg));
        }
        if let Some(reg) = data.reg_conductor {
            r.set("reg_conductor", format_reg(reg));
        }
        if let Some(m) = data.minimal_cone {
            r.set("minimal_cone", m);
        }
        for c in data.checks {
            if c.lhs.is_some() || c.rhs.is_some() {
                r.set(format!("bounds.{}.lhs", c.name), format_reg(c.lhs));
                r.set(format!("bounds.{}.rhs", c.name), format_reg(c.rhs));
            }
            r.verdict(format!("bounds.{}", c.name), c.verdict);
        }
        Ok(())
    });
    Ok(r)
}

pub fn cmd_analyze(inst: &InstanceFile, opts: &Options) -> Result<Report> {
    let p = inst.jonquieres(opts.limits)?;
    let start = Instant::now();
    let mut r = analyze_report(&p, opts)?;
    if opts.timings {
        r.set("timing.analyze_ms", start.elapsed().as_millis());
    }
    Ok(r)
}

/// Downgrades `count` random members of the Rees ideal of the
/// parametrization and checks every step stays inside it.
pub fn downgrade_membership(p: &JonquieresData, count: usize, seed: u64) -> Result<Verdict> {
    let y = p.extended_target();
    let param = p.parametrization();
    let rees = rees_ideal(&param, y, ReesRole::Jonquieres, p.limits())?;
    let h = p.cremona().inverse.coords();
    let x = p.source();
    let failures: Vec<String> = (0..count)
        .into_par_iter()
        .map(|k| -> Result<Option<String>> {
            let q = random_rees_member(&rees, seed.wrapping_add(k as u64))?;
            for (step, down) in iterated_downgrades(&q, h, x)?.iter().enumerate() {
                if !in_rees_kernel(down, y, &param)? {
                    return Ok(Some(format!("member {k}, downgrade {step}")));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(match failures.first() {
        None => Verdict::Holds,
        Some(first) => Verdict::Fails(format!("{} leaves the Rees ideal", first)),
    })
}

pub fn rees_report(p: &JonquieresData, opts: &Options) -> Result<Report> {
    let mut r = Report::new();
    guarded(&mut r, "downgraded", |r| {
        let d = downgraded_rees_ideal(p)?;
        r.set("generators", d.ideal.generators().len());
        if let Some(c) = d.codim {
            r.set("codim", c);
        }
        r.verdict("contained", d.contained);
        r.verdict("codimension", d.codimension);
        r.verdict("divisible", d.divisible);
        for (j, ch) in d.chains.iter().enumerate() {
            r.set(format!("chain.{j}.biform"), &ch.biform);
            r.set(format!("chain.{j}.full"), &ch.full);
            if let Some(q) = &ch.extraneous_factor {
                r.set(format!("chain.{j}.extraneous_factor"), q);
            }
        }
        Ok(())
    });
    guarded(&mut r, "members", |r| {
        r.set("count", opts.members);
        r.verdict("stay_in_rees", downgrade_membership(p, opts.members, opts.seed)?);
        Ok(())
    });
    guarded(&mut r, "monoid", |r| {
        let monoid = implicitize(p)?;
        let m = monoid_association(p, &monoid)?;
        r.set("coords", poly_list(m.parametrization.coords()));
        r.set("sign.paper", "-");
        r.set("sign.vanishing", if m.parametrization.sign > 0 { "+" } else { "-" });
        r.set("negative_sign_vanishes", m.negative_sign_vanishes);
        r.set("positive_sign_vanishes", m.positive_sign_vanishes);
        r.verdict("same_equation", m.same_equation.clone());
        r.set("compose.cremona_then_monoid", m.cremona_then_monoid.holds());
        r.set("compose.monoid_then_cremona", m.monoid_then_cremona.holds());
        r.set("compose.order", m.composition_order().unwrap_or("none"));
        r.verdict(
            "compose.exactly_one_order",
            Verdict::from_bool(
                m.composition_order().is_some(),
                "composition holds in zero or two orders",
            ),
        );
        let s = saturation_identities(p, &m.parametrization)?;
        r.verdict("saturation.forward", s.forward);
        r.verdict("saturation.backward", s.backward);
        // a control, not a verdict: without saturating the ideals usually differ
        r.set(
            "saturation.unsaturated_control",
            match &s.unsaturated_forward {
                Verdict::Holds => "equal".to_string(),
                Verdict::Fails(_) => "differs".to_string(),
                other => other.to_string(),
            },
        );
        if let Some(k) = s.forward_exponent {
            r.set("saturation.forward_exponent", k);
        }
        if let Some(k) = s.backward_exponent {
            r.set("saturation.backward_exponent", k);
        }
        Ok(())
    });
    Ok(r)
}

pub fn cmd_rees(inst: &InstanceFile, opts: &Options) -> Result<Report> {
    let p = inst.jonquieres(opts.limits)?;
    let start = Instant::now();
    let mut r = rees_report(&p, opts)?;
    if opts.timings {
        r.set("timing.rees_ms", start.elapsed().as_millis());
    }
    Ok(r)
}

/// One randomized self-test instance.
#[derive(Debug, Clone)]
pub struct SelftestCase {
    pub family: &'static str,
    pub profile: Profile,
    pub f_degree: u32,
    pub seed: u64,
}

/// Deterministic case list for `selftest`.
pub fn selftest_cases(seed: u64, count: usize) -> Vec<SelftestCase> {
    let families = ["identity2", "identity3", "involution", "tangent", "p3_cubic"];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let family = families[k % families.len()];
            let max_df = if family.starts_with("identity") { 3 } else { 2 };
            let f_degree = if family == "p3_cubic" {
                1
            } else {
                rng.gen_range(1..=max_df)
            };
            // generic P^3 instances make the Rees suite take minutes
            let inclusion = rng.gen_bool(0.3) || family == "p3_cubic";
            let profile = if inclusion {
                Profile::Inclusion
            } else {
                Profile::Generic
            };
            SelftestCase {
                family,
                profile,
                f_degree,
                seed: rng.gen(),
            }
        })
        .collect()
}

fn run_case(case: &SelftestCase, opts: &Options) -> Report {
    let mut r = Report::new();
    r.set("family", case.family);
    r.set("profile", format!("{:?}", case.profile).to_lowercase());
    let cremona = fixtures::families()
        .into_iter()
        .find(|(name, _)| *name == case.family)
        .map(|(_, c)| c)
        .expect("known family");
    let p = match fixtures::random_instance(&cremona, case.f_degree, case.profile, case.seed) {
        Ok(p) => p.with_limits(opts.limits),
        Err(e) => {
            r.verdict("instance", Verdict::Skipped(e.to_string()));
            return r;
        }
    };
    let small = p.n() == 2 || p.d() == 1;
    let sub_opts = Options {
        oracle: small,
        members: 2,
        ..opts.clone()
    };
    guarded(&mut r, "implicitize", |r| {
        *r = implicitize_report(&p, &sub_opts)?;
        Ok(())
    });
    guarded(&mut r, "analyze", |r| {
        *r = analyze_report(&p, &sub_opts)?;
        Ok(())
    });
    guarded(&mut r, "rees", |r| {
        *r = rees_report(&p, &sub_opts)?;
        Ok(())
    });
    r
}

/// Randomized property suites over the built-in Cremona families. With
/// `instance`, the file's instance is checked as well.
pub fn cmd_selftest(seed: u64, count: usize, instance: Option<&InstanceFile>, opts: &Options) -> Result<Report> {
    let cases = selftest_cases(seed, count);
    let run = || -> Vec<Report> { cases.par_iter().map(|c| run_case(c, opts)).collect() };
    let reports = if opts.jobs > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Hypothesis(format!("cannot start {} jobs: {e}", opts.jobs)))?
            .install(run)
    } else {
        cases.iter().map(|c| run_case(c, opts)).collect()
    };
    let mut r = Report::new();
    r.set("selftest.seed", seed);
    r.set("selftest.count", count);
    for (k, sub) in reports.into_iter().enumerate() {
        r.merge(&format!("selftest.{k:03}"), sub);
    }
    if let Some(inst) = instance {
        let p = inst.jonquieres(opts.limits)?;
        let mut sub = Report::new();
        guarded(&mut sub, "implicitize", |r| {
            *r = implicitize_report(&p, opts)?;
            Ok(())
        });
        guarded(&mut sub, "analyze", |r| {
            *r = analyze_report(&p, opts)?;
            Ok(())
        });
        guarded(&mut sub, "rees", |r| {
            *r = rees_report(&p, opts)?;
            Ok(())
        });
        r.merge("instance", sub);
    }
    let total = r.verdicts().count();
    let failed = r.verdicts().filter(|(_, v)| v.is_failure()).count();
    r.set("summary.verdicts", total);
    r.set("summary.failures", failed);
    Ok(r)
}
