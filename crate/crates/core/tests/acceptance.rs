//! The ten acceptance criteria, each at full size and exact equality. Prints
//! one PASS/FAIL line per criterion straight to stdout so the lines survive
//! output capture.

use std::io::Write;

use verschiebung::littlewood::core_quotient;
use verschiebung::sxp::characters::chi;
use verschiebung::sxp::sxp_schur;
use verschiebung::universal::{factor_verschiebung, Family};
use verschiebung::verify::Suite;
use verschiebung::Partition;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Hand-derived values checked next to each sweep.
fn pins(criterion: usize) -> Vec<(&'static str, bool)> {
    match criterion {
        1 => {
            let cq = core_quotient(&p("6,5,5,1"), 3).unwrap();
            let fig4 = core_quotient(&p("8,4,3,3,3,1,1"), 3).unwrap();
            vec![
                ("fig3 core", cq.core == p("1,1")),
                ("fig3 quotient", cq.quotient == vec![p("1"), p("-"), p("2,2")]),
                ("fig3 kappa", cq.kappa == vec![1, -1, 0]),
                ("fig4 kappa", fig4.kappa == vec![0, 1, -1]),
            ]
        }
        2 => {
            let (perm, sign) = verschiebung::littlewood::sigma_perm(&p("6,5,5,1"), 3, 6).unwrap();
            // 246513 has inversions 21 41 43 61 63 65 51 53: eight, so even.
            vec![("sigma_3 one-line", perm == vec![2, 4, 6, 5, 1, 3]), ("sigma_3 sign", sign == 1)]
        }
        7 => {
            // 𝒳_(2)(1;q) = h_2 + q and φ_2 h_2 = h_1.
            let r = factor_verschiebung(&p("2"), 1, 2).unwrap();
            let s = r.expand().unwrap().to_string();
            vec![("phi_2 X_(2)(1;q)", s == "s[1] + q*s[]")]
        }
        9 => vec![("chi^(2,2)((2,2)) = 2", chi(&p("2,2"), &p("2,2")).unwrap() == 2)],
        10 => {
            let v: Vec<(String, i64)> =
                sxp_schur(&p("1"), 2).unwrap().into_iter().map(|x| (x.nu.to_string(), x.value())).collect();
            vec![("p_2 = s_2 - s_11", v == vec![(p("2").to_string(), 1), (p("1,1").to_string(), -1)])]
        }
        8 => {
            // so⁺_(1) = s_1 + 1 and φ_2 kills s_1.
            let r = verschiebung::universal::factor_classical(&p("1"), 2, Family::SoPlus).unwrap();
            vec![("phi_2 so+_(1) = 1", r.expand().unwrap().to_string() == "s[]")]
        }
        _ => vec![],
    }
}

#[test]
fn acceptance() {
    let mut out = std::io::stdout();
    let mut all = true;
    for (i, suite) in Suite::ALL.into_iter().enumerate() {
        let criterion = i + 1;
        let report = suite.run(&suite.full_bounds());
        let bad_pins: Vec<_> = pins(criterion).into_iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
        let ok = report.passed() && bad_pins.is_empty();
        all &= ok;
        writeln!(
            out,
            "{} criterion {criterion:>2} [{}]: {} instances, {} failed, {} ms",
            if ok { "PASS" } else { "FAIL" },
            suite,
            report.instances,
            report.failed,
            report.wall_ms,
        )
        .unwrap();
        for note in &report.notes {
            writeln!(out, "     note: {note}").unwrap();
        }
        for f in report.failures.iter().take(5) {
            writeln!(out, "     {}: expected {}, got {}", f.instance, f.expected, f.actual).unwrap();
        }
        for name in bad_pins {
            writeln!(out, "     pinned value wrong: {name}").unwrap();
        }
    }
    out.flush().unwrap();
    assert!(all, "some acceptance criteria failed");
}
