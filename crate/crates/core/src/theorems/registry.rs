//! The registry entries and their evaluators.

use crate::error::Result;
use crate::families::{generate, is_family_t, FamilySpec};
use crate::graph::Graph;

use super::context::CheckContext;
use super::{require_eq, require_iff, require_le, ClaimKind, TheoremCheck, Verdict};

const SCAN_NEEDED: &str = "needs an exhaustive subset scan beyond the quantifier guard";

fn gallai_independence(ctx: &mut CheckContext) -> Result<Verdict> {
    let lhs = ctx.alpha()? + ctx.beta()?;
    Ok(require_eq(
        lhs,
        ctx.n(),
        "independence + vertex cover vs order",
    ))
}

fn gallai_roman(ctx: &mut CheckContext) -> Result<Verdict> {
    let lhs = ctx.roman()? + ctx.diff()?;
    Ok(require_eq(lhs, ctx.n(), "roman + differential vs order"))
}

fn gallai_italian(ctx: &mut CheckContext) -> Result<Verdict> {
    let lhs = ctx.italian()? + ctx.sd()?;
    Ok(require_eq(
        lhs,
        ctx.n(),
        "italian + strong differential vs order",
    ))
}

fn lemma_dominating_ds_set(ctx: &mut CheckContext) -> Result<Verdict> {
    let Some(scan) = ctx.scan() else {
        return Ok(Verdict::inconclusive(SCAN_NEEDED));
    };
    if scan.exists_dominating_optimum {
        Ok(Verdict::holds(scan.sd_max, scan.sd_max))
    } else {
        Ok(Verdict::violated(
            "no optimal strong-differential set is dominating",
        ))
    }
}

fn remark_ds_formula(ctx: &mut CheckContext) -> Result<Verdict> {
    let Some(scan) = ctx.scan() else {
        return Ok(Verdict::inconclusive(SCAN_NEEDED));
    };
    if scan.remark_formula_ok {
        Ok(Verdict::holds_plain())
    } else {
        let bad = scan.remark_bad_set.expect("bad set recorded");
        let set = ctx.set_from_mask(bad);
        Ok(
            Verdict::violated("a dominating optimal set fails sd = n - |D| - |Dw|")
                .with_witness("dominating-optimal-set", set),
        )
    }
}

fn order_quarter(ctx: &mut CheckContext) -> Result<Verdict> {
    if !(ctx.connected() && ctx.n() >= 3) {
        return Ok(Verdict::hypothesis_not_met());
    }
    Ok(require_le(
        ctx.n(),
        4 * ctx.sd()?,
        "order vs 4 * strong differential",
    ))
}

fn order_third(ctx: &mut CheckContext) -> Result<Verdict> {
    if !(ctx.connected() && ctx.min_degree() >= 2) {
        return Ok(Verdict::hypothesis_not_met());
    }
    Ok(require_le(
        ctx.n(),
        3 * ctx.sd()?,
        "order vs 3 * strong differential",
    ))
}

fn order_half(ctx: &mut CheckContext) -> Result<Verdict> {
    if !(ctx.connected() && ctx.min_degree() >= 3) {
        return Ok(Verdict::hypothesis_not_met());
    }
    Ok(require_le(
        ctx.n(),
        2 * ctx.sd()?,
        "order vs 2 * strong differential",
    ))
}

fn italian_basics(ctx: &mut CheckContext) -> Result<Verdict> {
    let italian = ctx.italian()?;
    let roman = ctx.roman()?;
    let gamma = ctx.gamma()?;
    let gamma2 = ctx.gamma2()?;
    if ctx.is_tree() && ctx.n() >= 2 && italian < gamma + 1 {
        return Ok(Verdict::violated(format!(
            "nontrivial tree with italian {italian} < domination {gamma} + 1"
        ))
        .with_values(italian, gamma + 1));
    }
    if italian > roman {
        return Ok(
            Verdict::violated(format!("italian {italian} > roman {roman}"))
                .with_values(italian, roman),
        );
    }
    if roman > 2 * gamma {
        return Ok(
            Verdict::violated(format!("roman {roman} > 2 * domination {gamma}"))
                .with_values(roman, 2 * gamma),
        );
    }
    if italian > gamma2 {
        return Ok(
            Verdict::violated(format!("italian {italian} > 2-domination {gamma2}"))
                .with_values(italian, gamma2),
        );
    }
    Ok(Verdict::holds_plain())
}

fn sandwich_sigma(ctx: &mut CheckContext) -> Result<Verdict> {
    let sd = ctx.sd()?;
    let n = ctx.n();
    let lower = n - (2 * ctx.gamma()?).min(ctx.gamma2()?);
    let upper = n - ctx.gamma()? - ctx.sigma();
    if lower <= sd && sd <= upper {
        Ok(Verdict::holds(lower, upper))
    } else {
        Ok(Verdict::violated(format!(
            "strong differential {sd} outside [{lower}, {upper}]"
        ))
        .with_values(lower, upper))
    }
}

fn iff_gamma(ctx: &mut CheckContext) -> Result<Verdict> {
    let left = ctx.sd()? == ctx.n() - ctx.gamma()?;
    let right = ctx.gamma2()? == ctx.gamma()?;
    Ok(require_iff(
        left,
        right,
        "sd = n - domination",
        "2-domination = domination",
    ))
}

fn iff_gamma2_witness(ctx: &mut CheckContext) -> Result<Verdict> {
    let gamma2 = ctx.gamma2()?;
    let n = ctx.n();
    let Some(scan) = ctx.scan() else {
        return Ok(Verdict::inconclusive(SCAN_NEEDED));
    };
    let left = scan.sd_max == n - gamma2;
    let right = scan.exists_dominating_optimum_without_weak;
    Ok(require_iff(
        left,
        right,
        "sd = n - 2-domination",
        "a dominating optimal set without weak defenders exists",
    ))
}

fn iff_2gamma(ctx: &mut CheckContext) -> Result<Verdict> {
    let Some(scan) = ctx.scan() else {
        return Ok(Verdict::inconclusive(SCAN_NEEDED));
    };
    let left = scan.sd_max == ctx.n() - 2 * scan.gamma;
    let right = scan.every_gamma_set_optimal_strongless;
    let bad = scan.gamma_set_bad;
    let mut verdict = require_iff(
        left,
        right,
        "sd = n - 2 * domination",
        "every minimum dominating set is optimal with weak defenders only",
    );
    if verdict.status == super::CheckStatus::Violated {
        if let Some(mask) = bad {
            verdict = verdict.with_witness("minimum-dominating-set", ctx.set_from_mask(mask));
        }
    }
    Ok(verdict)
}

fn strict_gamma_set(ctx: &mut CheckContext) -> Result<Verdict> {
    let Some(scan) = ctx.scan() else {
        return Ok(Verdict::inconclusive(SCAN_NEEDED));
    };
    if !scan.exists_gamma_set_with_strong {
        return Ok(Verdict::hypothesis_not_met());
    }
    let witness_mask = scan.gamma_set_with_strong.expect("witness recorded");
    let sd = scan.sd_max;
    let bound = ctx.n() - 2 * scan.gamma + 1;
    let mut verdict = require_le(bound, sd, "n - 2 * domination + 1 vs strong differential");
    verdict = verdict.with_witness(
        "minimum-dominating-set-with-strong-defender",
        ctx.set_from_mask(witness_mask),
    );
    Ok(verdict)
}

fn half_n_minus_gamma(ctx: &mut CheckContext) -> Result<Verdict> {
    if ctx.min_degree() < 2 {
        return Ok(Verdict::hypothesis_not_met());
    }
    let lhs = ctx.n() - ctx.gamma()?;
    Ok(require_le(
        lhs,
        2 * ctx.sd()?,
        "n - domination vs 2 * strong differential",
    ))
}

fn corona_identity(ctx: &mut CheckContext) -> Result<Verdict> {
    let Some(FamilySpec::Corona { outer, inner }) = ctx.source else {
        return Ok(Verdict::hypothesis_not_met());
    };
    let g1 = generate(outer)?;
    let g2 = generate(inner)?;
    if g2.order() < 2 {
        return Ok(Verdict::hypothesis_not_met());
    }
    let expected = (g1.order() * (g2.order() - 1)) as i64;
    let sd = ctx.sd()?;
    let diff = ctx.diff()?;
    if sd == expected && diff == expected {
        Ok(Verdict::holds(sd, expected))
    } else {
        Ok(Verdict::violated(format!(
            "corona should have differential = strong differential = {expected}, got {diff} and {sd}"
        ))
        .with_values(sd, expected))
    }
}

fn diff_sandwich(ctx: &mut CheckContext) -> Result<Verdict> {
    let sd = ctx.sd()?;
    let diff = ctx.diff()?;
    let upper = diff + ctx.gamma()? - 1;
    if diff <= sd && sd <= upper {
        Ok(Verdict::holds(diff, upper))
    } else {
        Ok(Verdict::violated(format!(
            "strong differential {sd} outside [{diff}, {upper}]"
        ))
        .with_values(diff, upper))
    }
}

fn iff_equal_differentials(ctx: &mut CheckContext) -> Result<Verdict> {
    let diff = ctx.diff()?;
    let Some(scan) = ctx.scan() else {
        return Ok(Verdict::inconclusive(SCAN_NEEDED));
    };
    let left = scan.sd_max == diff;
    let right = scan.exists_optimum_all_weak;
    Ok(require_iff(
        left,
        right,
        "strong differential = differential",
        "an optimal set with weak defenders only exists",
    ))
}

fn tree_3_4_roman(ctx: &mut CheckContext) -> Result<Verdict> {
    if !ctx.is_tree() {
        return Ok(Verdict::hypothesis_not_met());
    }
    let lhs = 3 * ctx.roman()?;
    Ok(require_le(
        lhs,
        4 * ctx.italian()?,
        "3 * roman vs 4 * italian",
    ))
}

fn tree_floor_bound(ctx: &mut CheckContext) -> Result<Verdict> {
    if !ctx.is_tree() {
        return Ok(Verdict::hypothesis_not_met());
    }
    let lhs = 4 * ctx.sd()?;
    let rhs = ctx.n() + 3 * ctx.diff()?;
    Ok(require_le(
        lhs,
        rhs,
        "4 * strong differential vs n + 3 * differential",
    ))
}

fn maxdeg_sandwich(ctx: &mut CheckContext) -> Result<Verdict> {
    let sd = ctx.sd()?;
    let delta = ctx.max_degree();
    if delta - 1 > sd {
        return Ok(
            Verdict::violated(format!("max degree - 1 = {} > {sd}", delta - 1))
                .with_values(delta - 1, sd),
        );
    }
    Ok(require_le(
        (delta + 2) * sd,
        ctx.n() * delta,
        "(max degree + 2) * sd vs n * max degree",
    ))
}

fn iff_maxdeg(ctx: &mut CheckContext) -> Result<Verdict> {
    let delta = ctx.max_degree();
    let n = ctx.n();
    let left = (delta + 2) * ctx.sd()? == n * delta;
    let right = (delta + 2) * ctx.gamma2()? == 2 * n;
    Ok(require_iff(
        left,
        right,
        "sd = n * max degree / (max degree + 2)",
        "2-domination = 2n / (max degree + 2)",
    ))
}

fn lemma_t_weak_witness(ctx: &mut CheckContext) -> Result<Verdict> {
    if !ctx.is_tree() || ctx.n() < 3 || !is_family_t(ctx.graph)? {
        return Ok(Verdict::hypothesis_not_met());
    }
    let delta = ctx.max_degree() as usize;
    let max_degree_vertices: Vec<usize> = (0..ctx.graph.order())
        .filter(|&v| ctx.graph.degree(v).expect("in range") == delta)
        .collect();
    let Some(scan) = ctx.scan() else {
        return Ok(Verdict::inconclusive(SCAN_NEEDED));
    };
    for v in max_degree_vertices {
        if scan.weak_union_over_optima >> v & 1 == 0 {
            return Ok(Verdict::violated(format!(
                "no optimal set has vertex {v} among its weak defenders"
            )));
        }
    }
    Ok(Verdict::holds_plain())
}

fn tree_family_t(ctx: &mut CheckContext) -> Result<Verdict> {
    if !ctx.is_tree() || ctx.n() < 3 {
        return Ok(Verdict::hypothesis_not_met());
    }
    let left = ctx.sd()? == ctx.max_degree() - 1;
    let right = is_family_t(ctx.graph)?;
    Ok(require_iff(
        left,
        right,
        "sd = max degree - 1",
        "tree family membership",
    ))
}

fn alpha_lower(ctx: &mut CheckContext) -> Result<Verdict> {
    if ctx.min_degree() < 2 {
        return Ok(Verdict::hypothesis_not_met());
    }
    Ok(require_le(
        ctx.alpha()?,
        ctx.sd()?,
        "independence vs strong differential",
    ))
}

fn half_beta(ctx: &mut CheckContext) -> Result<Verdict> {
    if !ctx.every_component_max_degree_ge2() {
        return Ok(Verdict::hypothesis_not_met());
    }
    Ok(require_le(
        ctx.beta()?,
        2 * ctx.sd()?,
        "vertex cover vs 2 * strong differential",
    ))
}

fn domchain(ctx: &mut CheckContext) -> Result<Verdict> {
    if !ctx.no_isolated() {
        return Ok(Verdict::hypothesis_not_met());
    }
    let gamma = ctx.gamma()?;
    let gamma_t2 = ctx.gamma_t2()?;
    let gamma2 = ctx.gamma2()?;
    if gamma <= gamma_t2 && gamma_t2 <= gamma2 {
        Ok(Verdict::holds(gamma, gamma2))
    } else {
        Ok(Verdict::violated(format!(
            "chain broken: domination {gamma}, semitotal {gamma_t2}, 2-domination {gamma2}"
        )))
    }
}

fn semitotal_upper(ctx: &mut CheckContext) -> Result<Verdict> {
    if !ctx.no_isolated() {
        return Ok(Verdict::hypothesis_not_met());
    }
    let rhs = ctx.n() - ctx.gamma_t2()?;
    Ok(require_le(
        ctx.sd()?,
        rhs,
        "strong differential vs n - semitotal",
    ))
}

fn semitotal_eq(ctx: &mut CheckContext) -> Result<Verdict> {
    if !ctx.no_isolated() || ctx.gamma_t2()? != ctx.gamma2()? {
        return Ok(Verdict::hypothesis_not_met());
    }
    let rhs = ctx.n() - ctx.gamma2()?;
    Ok(require_eq(
        ctx.sd()?,
        rhs,
        "strong differential vs n - 2-domination",
    ))
}

fn trivial_i(ctx: &mut CheckContext) -> Result<Verdict> {
    if ctx.n() < 3 {
        return Ok(Verdict::hypothesis_not_met());
    }
    let sd = ctx.sd()?;
    if 0 <= sd && sd <= ctx.n() - 2 {
        Ok(Verdict::holds(0, ctx.n() - 2))
    } else {
        Ok(Verdict::violated(format!(
            "strong differential {sd} outside [0, n - 2]"
        )))
    }
}

fn trivial_ii(ctx: &mut CheckContext) -> Result<Verdict> {
    if ctx.n() < 3 {
        return Ok(Verdict::hypothesis_not_met());
    }
    let left = ctx.sd()? == 0;
    let right = ctx.max_degree() <= 1;
    Ok(require_iff(left, right, "sd = 0", "max degree <= 1"))
}

/// Components isomorphic to the triangle or the paths on three or four
/// vertices, recognisable by order, size and maximum degree alone.
fn special_component(g: &Graph, comp: &crate::graph::VertexSet) -> bool {
    let vertices: Vec<usize> = comp.iter().collect();
    let edge_count = g.edges().iter().filter(|&&(u, _)| comp.contains(u)).count();
    let max_deg = vertices
        .iter()
        .map(|&v| g.degree(v).expect("in range"))
        .max()
        .unwrap_or(0);
    match (vertices.len(), edge_count, max_deg) {
        (3, 3, 2) => true, // triangle
        (3, 2, 2) => true, // path on 3
        (4, 3, 2) => true, // path on 4
        _ => false,
    }
}

fn trivial_iii(ctx: &mut CheckContext) -> Result<Verdict> {
    if ctx.n() < 3 {
        return Ok(Verdict::hypothesis_not_met());
    }
    let left = ctx.sd()? == 1;
    let comps = ctx.graph.components();
    let special = comps
        .iter()
        .filter(|c| special_component(ctx.graph, c))
        .count();
    let rest_small = comps
        .iter()
        .filter(|c| !special_component(ctx.graph, c))
        .all(|c| c.len() <= 2);
    let right = special == 1 && rest_small;
    Ok(require_iff(
        left,
        right,
        "sd = 1",
        "one triangle/short-path component plus trivial components",
    ))
}

fn trivial_iv(ctx: &mut CheckContext) -> Result<Verdict> {
    if ctx.n() < 3 {
        return Ok(Verdict::hypothesis_not_met());
    }
    let n = ctx.n();
    let left = ctx.sd()? == n - 2;
    let right = ctx.max_degree() == n - 1 || ctx.gamma2()? == 2;
    Ok(require_iff(
        left,
        right,
        "sd = n - 2",
        "max degree = n - 1 or 2-domination = 2",
    ))
}

fn trivial_v(ctx: &mut CheckContext) -> Result<Verdict> {
    if ctx.n() < 3 {
        return Ok(Verdict::hypothesis_not_met());
    }
    let n = ctx.n();
    let delta = ctx.max_degree();
    let gamma2 = ctx.gamma2()?;
    let left = ctx.sd()? == n - 3;
    let right = (gamma2 == 3 && delta <= n - 2) || (gamma2 > 3 && delta == n - 2);
    Ok(require_iff(
        left,
        right,
        "sd = n - 3",
        "(2-domination, max degree) in the boundary configuration",
    ))
}

fn table_gamma_sigma(ctx: &mut CheckContext) -> Result<Verdict> {
    let rhs = ctx.italian()?;
    Ok(require_le(
        ctx.gamma()? + ctx.sigma(),
        rhs,
        "domination + sigma vs italian",
    ))
}

fn table_iff_gamma(ctx: &mut CheckContext) -> Result<Verdict> {
    let left = ctx.italian()? == ctx.gamma()?;
    let right = ctx.gamma2()? == ctx.gamma()?;
    Ok(require_iff(
        left,
        right,
        "italian = domination",
        "2-domination = domination",
    ))
}

fn table_half_order_gamma(ctx: &mut CheckContext) -> Result<Verdict> {
    if ctx.min_degree() < 2 {
        return Ok(Verdict::hypothesis_not_met());
    }
    let lhs = 2 * ctx.italian()?;
    Ok(require_le(
        lhs,
        ctx.n() + ctx.gamma()?,
        "2 * italian vs n + domination",
    ))
}

fn table_roman_gap(ctx: &mut CheckContext) -> Result<Verdict> {
    let lhs = ctx.roman()? - ctx.gamma()? + 1;
    Ok(require_le(
        lhs,
        ctx.italian()?,
        "roman - domination + 1 vs italian",
    ))
}

fn table_iff_maxdeg(ctx: &mut CheckContext) -> Result<Verdict> {
    let delta = ctx.max_degree();
    let n = ctx.n();
    let left = (delta + 2) * ctx.italian()? == 2 * n;
    let right = (delta + 2) * ctx.gamma2()? == 2 * n;
    Ok(require_iff(
        left,
        right,
        "italian = 2n / (max degree + 2)",
        "2-domination = 2n / (max degree + 2)",
    ))
}

fn table_alpha(ctx: &mut CheckContext) -> Result<Verdict> {
    if ctx.min_degree() < 2 {
        return Ok(Verdict::hypothesis_not_met());
    }
    let rhs = ctx.n() - ctx.alpha()?;
    Ok(require_le(
        ctx.italian()?,
        rhs,
        "italian vs n - independence",
    ))
}

fn table_half_beta(ctx: &mut CheckContext) -> Result<Verdict> {
    if !ctx.every_component_max_degree_ge2() {
        return Ok(Verdict::hypothesis_not_met());
    }
    let lhs = 2 * ctx.italian()?;
    Ok(require_le(
        lhs,
        2 * ctx.n() - ctx.beta()?,
        "2 * italian vs 2n - vertex cover",
    ))
}

fn table_semitotal(ctx: &mut CheckContext) -> Result<Verdict> {
    if !ctx.no_isolated() {
        return Ok(Verdict::hypothesis_not_met());
    }
    Ok(require_le(
        ctx.gamma_t2()?,
        ctx.italian()?,
        "semitotal vs italian",
    ))
}

fn table_semitotal_eq(ctx: &mut CheckContext) -> Result<Verdict> {
    if !ctx.no_isolated() || ctx.gamma_t2()? != ctx.gamma2()? {
        return Ok(Verdict::hypothesis_not_met());
    }
    Ok(require_eq(
        ctx.italian()?,
        ctx.gamma2()?,
        "italian vs 2-domination",
    ))
}

pub(super) const REGISTRY: &[TheoremCheck] = &[
    TheoremCheck::new(
        "gallai-independence",
        "independence number + vertex cover number = order",
        ClaimKind::Identity,
        gallai_independence,
    ),
    TheoremCheck::new(
        "gallai-roman",
        "roman domination number + differential = order",
        ClaimKind::Identity,
        gallai_roman,
    ),
    TheoremCheck::new(
        "gallai-italian",
        "italian domination number + strong differential = order",
        ClaimKind::Identity,
        gallai_italian,
    ),
    TheoremCheck::new(
        "lemma-dominating-ds-set",
        "some optimal strong-differential set is a dominating set",
        ClaimKind::Implication,
        lemma_dominating_ds_set,
    ),
    TheoremCheck::new(
        "remark-ds-formula",
        "every dominating optimal set satisfies sd = n - |D| - |Dw|",
        ClaimKind::Identity,
        remark_ds_formula,
    ),
    TheoremCheck::new(
        "order-quarter",
        "connected with n >= 3: strong differential >= n / 4",
        ClaimKind::Inequality,
        order_quarter,
    ),
    TheoremCheck::new(
        "order-third",
        "connected with min degree >= 2: strong differential >= n / 3",
        ClaimKind::Inequality,
        order_third,
    ),
    TheoremCheck::new(
        "order-half",
        "connected with min degree >= 3: strong differential >= n / 2",
        ClaimKind::Inequality,
        order_half,
    ),
    TheoremCheck::new(
        "italian-basics",
        "nontrivial trees: italian >= domination + 1; always: italian <= roman <= 2 * domination and italian <= 2-domination",
        ClaimKind::Inequality,
        italian_basics,
    ),
    TheoremCheck::new(
        "sandwich-sigma",
        "n - min(2 * domination, 2-domination) <= strong differential <= n - domination - sigma",
        ClaimKind::Inequality,
        sandwich_sigma,
    ),
    TheoremCheck::new(
        "iff-gamma",
        "strong differential = n - domination iff 2-domination = domination",
        ClaimKind::Iff,
        iff_gamma,
    ),
    TheoremCheck::new(
        "iff-gamma2-witness",
        "strong differential = n - 2-domination iff some dominating optimal set has no weak defenders",
        ClaimKind::Iff,
        iff_gamma2_witness,
    ),
    TheoremCheck::new(
        "iff-2gamma",
        "strong differential = n - 2 * domination iff every minimum dominating set is optimal with weak defenders only",
        ClaimKind::Iff,
        iff_2gamma,
    ),
    TheoremCheck::new(
        "strict-gamma-set",
        "a minimum dominating set with a strong defender forces strong differential >= n - 2 * domination + 1",
        ClaimKind::Implication,
        strict_gamma_set,
    ),
    TheoremCheck::new(
        "half-n-minus-gamma",
        "min degree >= 2: strong differential >= (n - domination) / 2",
        ClaimKind::Inequality,
        half_n_minus_gamma,
    ),
    TheoremCheck::new(
        "corona",
        "corona products: differential = strong differential = n1 * (n2 - 1)",
        ClaimKind::Identity,
        corona_identity,
    ),
    TheoremCheck::new(
        "diff-sandwich",
        "differential <= strong differential <= differential + domination - 1",
        ClaimKind::Inequality,
        diff_sandwich,
    ),
    TheoremCheck::new(
        "iff-equal-differentials",
        "strong differential = differential iff some optimal set has weak defenders only",
        ClaimKind::Iff,
        iff_equal_differentials,
    ),
    TheoremCheck::new(
        "tree-3-4-roman",
        "trees: italian >= 3/4 * roman",
        ClaimKind::Inequality,
        tree_3_4_roman,
    ),
    TheoremCheck::new(
        "tree-floor-bound",
        "trees: strong differential <= floor((n + 3 * differential) / 4)",
        ClaimKind::Inequality,
        tree_floor_bound,
    ),
    TheoremCheck::new(
        "maxdeg-sandwich",
        "max degree - 1 <= strong differential <= n * max degree / (max degree + 2)",
        ClaimKind::Inequality,
        maxdeg_sandwich,
    ),
    TheoremCheck::new(
        "iff-maxdeg",
        "strong differential attains n * max degree / (max degree + 2) iff 2-domination attains 2n / (max degree + 2)",
        ClaimKind::Iff,
        iff_maxdeg,
    ),
    TheoremCheck::new(
        "lemma-T-weak-witness",
        "tree family members: every maximum-degree vertex is a weak defender of some optimal set",
        ClaimKind::Implication,
        lemma_t_weak_witness,
    ),
    TheoremCheck::new(
        "tree-family-T",
        "trees with n >= 3: strong differential = max degree - 1 iff the tree is a family member",
        ClaimKind::Iff,
        tree_family_t,
    ),
    TheoremCheck::new(
        "alpha-lower",
        "min degree >= 2: strong differential >= independence number",
        ClaimKind::Inequality,
        alpha_lower,
    ),
    TheoremCheck::new(
        "half-beta",
        "every component with max degree >= 2: strong differential >= vertex cover / 2",
        ClaimKind::Inequality,
        half_beta,
    ),
    TheoremCheck::new(
        "domchain",
        "no isolated vertices: domination <= semitotal <= 2-domination",
        ClaimKind::Inequality,
        domchain,
    ),
    TheoremCheck::new(
        "semitotal-upper",
        "no isolated vertices: strong differential <= n - semitotal domination",
        ClaimKind::Inequality,
        semitotal_upper,
    ),
    TheoremCheck::new(
        "semitotal-eq",
        "semitotal = 2-domination forces strong differential = n - 2-domination",
        ClaimKind::Implication,
        semitotal_eq,
    ),
    TheoremCheck::new(
        "trivial-i",
        "n >= 3: 0 <= strong differential <= n - 2",
        ClaimKind::Inequality,
        trivial_i,
    ),
    TheoremCheck::new(
        "trivial-ii",
        "n >= 3: strong differential = 0 iff max degree <= 1",
        ClaimKind::Iff,
        trivial_ii,
    ),
    TheoremCheck::new(
        "trivial-iii",
        "n >= 3: strong differential = 1 iff the graph is a triangle or short path plus trivial components",
        ClaimKind::Iff,
        trivial_iii,
    ),
    TheoremCheck::new(
        "trivial-iv",
        "n >= 3: strong differential = n - 2 iff max degree = n - 1 or 2-domination = 2",
        ClaimKind::Iff,
        trivial_iv,
    ),
    TheoremCheck::new(
        "trivial-v",
        "n >= 3: strong differential = n - 3 iff (2-domination = 3 and max degree <= n - 2) or (2-domination > 3 and max degree = n - 2)",
        ClaimKind::Iff,
        trivial_v,
    ),
    TheoremCheck::new(
        "table-gamma-sigma",
        "italian >= domination + sigma",
        ClaimKind::Inequality,
        table_gamma_sigma,
    ),
    TheoremCheck::new(
        "table-iff-gamma",
        "italian = domination iff 2-domination = domination",
        ClaimKind::Iff,
        table_iff_gamma,
    ),
    TheoremCheck::new(
        "table-half-order-gamma",
        "min degree >= 2: italian <= (n + domination) / 2",
        ClaimKind::Inequality,
        table_half_order_gamma,
    ),
    TheoremCheck::new(
        "table-roman-gap",
        "italian >= roman - domination + 1",
        ClaimKind::Inequality,
        table_roman_gap,
    ),
    TheoremCheck::new(
        "table-iff-maxdeg",
        "italian attains 2n / (max degree + 2) iff 2-domination does",
        ClaimKind::Iff,
        table_iff_maxdeg,
    ),
    TheoremCheck::new(
        "table-alpha",
        "min degree >= 2: italian <= n - independence number",
        ClaimKind::Inequality,
        table_alpha,
    ),
    TheoremCheck::new(
        "table-half-beta",
        "every component with max degree >= 2: italian <= n - vertex cover / 2",
        ClaimKind::Inequality,
        table_half_beta,
    ),
    TheoremCheck::new(
        "table-semitotal",
        "no isolated vertices: italian >= semitotal domination",
        ClaimKind::Inequality,
        table_semitotal,
    ),
    TheoremCheck::new(
        "table-semitotal-eq",
        "semitotal = 2-domination forces italian = 2-domination",
        ClaimKind::Implication,
        table_semitotal_eq,
    ),
];
