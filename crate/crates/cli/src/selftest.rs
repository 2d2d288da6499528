use anyhow::Result;
use klr_core::chevalley::{cross_route, fold, fold_check, folded_algebra};
use klr_core::klr::fixtures::{check_minimal_pairs, g2_module, table_rows};
use klr_core::klr::{character_ratio, Budget, CuspidalBuilder, KlrAlgebra};
use klr_core::pbw::{
    check_cuspidal_restriction, check_monomials, check_power_indivisible, check_restriction_pattern, check_table,
    check_unitriangular, CuspidalTable, Verdict,
};
use klr_core::rootsys::{height, hmm_order, kp_vectors, ConvexOrder, RootSystem};
use klr_core::shuffle::GramCache;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::RunConfig;

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// Orders to test: every reduced word when there are at most `samples`,
/// otherwise a seeded sample. The HMM order always comes first.
pub fn sample_orders(rs: &RootSystem, seed: u64, samples: usize) -> Result<Vec<(String, ConvexOrder)>> {
    let mut out = vec![("hmm".to_string(), hmm_order(rs)?.order)];
    let all = rs.reduced_words(samples + 1);
    let words = if all.len() <= samples {
        all
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples).map(|_| rs.random_reduced_word(&mut rng)).collect()
    };
    for w in words {
        let label = klr_core::rootsys::word_string(&w);
        out.push((label, ConvexOrder::from_reduced_word(rs, &w)?));
    }
    Ok(out)
}

pub fn run(cfg: &RunConfig, seed: u64, samples: usize) -> Result<Vec<CheckResult>> {
    let rs = &cfg.rs;
    let h = cfg.max_height;
    let mut results = Vec::new();
    let mut push = |name, verdict| results.push(CheckResult { name, verdict });

    let orders = sample_orders(rs, seed, samples)?;
    let mut v = Verdict::new();
    for (label, o) in &orders {
        v.check(o.is_convex(rs), || format!("order {label} is not convex"));
    }
    push("convexity", v);

    let mut v = Verdict::new();
    let mut tables = Vec::new();
    for (label, o) in &orders {
        let t = CuspidalTable::build(rs, o)?;
        let mut tv = check_table(rs, &t)?;
        tv.failures.iter_mut().for_each(|f| *f = format!("order {label}: {f}"));
        v.merge(tv);
        tables.push(t);
    }
    push("cuspidal characters", v);
    let table = &tables[0];

    let mut v = Verdict::new();
    for alpha in rs.positive_roots().iter().filter(|a| height(a) <= h) {
        v.merge(check_cuspidal_restriction(rs, table, alpha)?);
        if 2 * height(alpha) <= h {
            v.merge(check_power_indivisible(rs, table, alpha, 2)?);
        }
    }
    push("cuspidal restrictions", v);

    let gram = GramCache::new(rs.cartan());
    let (mut mono, mut restr, mut tri) = (Verdict::new(), Verdict::new(), Verdict::new());
    for k in 1..=h {
        for nu in rs.weights_of_height(k) {
            mono.merge(check_monomials(rs, table, &gram, &nu, true)?);
            let ms = kp_vectors(&table.order, &nu);
            for m in &ms {
                tri.merge(check_unitriangular(rs, table, m)?);
                for n in &ms {
                    let c = check_restriction_pattern(rs, table, m, n)?;
                    restr.check(c.is_zero == c.predicted_zero && c.diagonal_match != Some(false), || {
                        format!("m = {}, n = {}: {c:?}", m.label(), n.label())
                    });
                }
            }
        }
    }
    push("dual PBW monomials", mono);
    push("restriction pattern", restr);
    push("unitriangularity", tri);

    if let Some(rows) = rs.cartan().name().and_then(table_rows) {
        push("tabulated minimal pairs", check_minimal_pairs(rs, rows)?);
    }

    let mut v = Verdict::new();
    let cr = cross_route(rs, &table.order, table, h)?;
    for r in cr.rows.iter().filter(|r| !r.matches) {
        v.check(false, || format!("{:?} word {}: character {} vs pairing {}", r.root, r.word, r.character_q1, r.z));
    }
    v.checked += cr.rows.len();
    push("q = 1 cross-route", v);

    if !rs.cartan().is_simply_laced() {
        let fa = folded_algebra(fold(rs.cartan())?)?;
        let mut v = Verdict::new();
        for c in fold_check(&fa, &table.order.reduced_word(rs)?, h)? {
            v.check(c.sum_matches && c.nonnegative, || format!("{:?} word {}: {c:?}", c.root, c.word));
        }
        push("folding positivity", v);
    }

    if rs.cartan().name() == Some("G2") {
        let alg = KlrAlgebra::new(rs.cartan().clone());
        let mut v = Verdict::new();
        for viol in g2_module().verify(&alg, cfg.field)? {
            v.check(false, || viol.to_string());
        }
        v.checked += 1;
        push("G2 module", v);
    }

    if rs.rank() <= 3 {
        let alg = KlrAlgebra::new(rs.cartan().clone());
        let mut b = CuspidalBuilder::new(&alg, rs, &table.order, Budget { max_dim: cfg.max_dim });
        let mut v = Verdict::new();
        for alpha in rs.positive_roots().iter().filter(|a| height(a) <= h.min(4)) {
            let m = b.build(alpha)?;
            let ratio = character_ratio(&m.module.character(), table.get(alpha));
            v.check(ratio.as_ref().and_then(|r| r.as_monomial()).is_some_and(|(c, _)| *c == 1.into()), || {
                format!("{alpha:?}: character ratio {:?}", ratio.map(|r| r.to_string()))
            });
        }
        push("cuspidal modules", v);
    }
    Ok(results)
}
