use dirac_osc::config::grid;
use dirac_osc::{run_evolve, run_spectrum, run_sweep, run_verify, Cell, Format, RunConfig};

fn small_sweep() -> RunConfig {
    let mut cfg = RunConfig::default();
    cfg.apply_overrides(["t_max=10", "t_steps=40", "gamma_steps=12"]).unwrap();
    cfg
}

#[test]
fn sweep_is_deterministic() {
    let cfg = small_sweep();
    let a = run_sweep(&cfg).unwrap().to_table(&cfg);
    let b = run_sweep(&cfg).unwrap().to_table(&cfg);
    assert_eq!(a.to_csv(), b.to_csv());
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn sweep_ignores_worker_count() {
    let cfg = small_sweep();
    let with = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| run_sweep(&cfg).unwrap().to_table(&cfg).to_csv())
    };
    assert_eq!(with(1), with(4));
}

#[test]
fn sweep_rows_are_gamma_major_and_bounded() {
    let cfg = small_sweep();
    let sweep = run_sweep(&cfg).unwrap();
    assert_eq!(sweep.points.len(), 13 * 41);
    for (g, &gamma) in sweep.gammas.iter().enumerate() {
        for (p, &t) in sweep.row(g).iter().zip(&sweep.times) {
            assert_eq!((p.gamma, p.t), (gamma, t));
            assert!(p.purity >= 0.5 - 1e-10 && p.purity <= 1.0 + 1e-10);
            assert!(p.entropy >= -1e-10 && p.entropy <= std::f64::consts::LN_2 + 1e-10);
        }
    }
    assert_eq!(sweep.gammas, grid(0.0, 6.4, 12));
}

#[test]
fn csv_layout() {
    let cfg = small_sweep();
    let csv = run_sweep(&cfg).unwrap().to_table(&cfg).to_csv();
    assert!(!csv.contains('\r'));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("gamma,t,purity,entropy"));
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first.len(), 4);
    // 17 significant digits
    let mantissa = first[2].split('e').next().unwrap();
    assert_eq!(mantissa.chars().filter(char::is_ascii_digit).count(), 17);
    assert!((first[2].parse::<f64>().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn evolve_starts_pure() {
    let mut cfg = RunConfig::default();
    cfg.apply_overrides(["gamma=3.2", "t_steps=20"]).unwrap();
    let table = run_evolve(&cfg).unwrap();
    assert_eq!(table.columns, ["t", "purity", "entropy"]);
    assert_eq!(table.rows.len(), 21);
    match (&table.rows[0][1], &table.rows[0][2]) {
        (Cell::Num(p), Cell::Num(s)) => assert!((p - 1.0).abs() < 1e-12 && s.abs() < 1e-12),
        other => panic!("{other:?}"),
    }
}

fn numbers(table: &dirac_osc::Table, col: usize) -> Vec<f64> {
    table.rows.iter().filter_map(|r| if let Cell::Num(x) = r[col] { Some(x) } else { None }).collect()
}

#[test]
fn spectrum_static_field_deviations() {
    let mut cfg = RunConfig::default();
    cfg.apply_overrides(["alpha=0", "gamma=1.3", "A=0.4", "B=0.7", "n_range=0..=10"]).unwrap();
    let table = run_spectrum(&cfg).unwrap();
    assert_eq!(table.columns, ["sector", "branch", "E_closed", "E_numeric", "abs_dev"]);
    assert_eq!(table.rows.len(), 44);
    assert!(numbers(&table, 4).iter().all(|&d| d < 1e-8));
    assert_eq!(table.metadata["closed_form"], "alpha=0");
}

#[test]
fn spectrum_without_field_is_the_free_oscillator() {
    let mut cfg = RunConfig::default();
    cfg.apply_overrides(["A=0", "B=0", "m=1.5", "n_range=0..=5"]).unwrap();
    let table = run_spectrum(&cfg).unwrap();
    let values = numbers(&table, 3);
    for n in 0..=5 {
        let lo = (2.25 + n as f64 + 1.0).sqrt();
        let hi = (2.25 + n as f64 + 2.0).sqrt();
        let mut got = values[4 * n..4 * n + 4].to_vec();
        got.sort_by(f64::total_cmp);
        let expect = [-hi, -lo, lo, hi];
        assert!(got.iter().zip(expect).all(|(a, b)| (a - b).abs() < 1e-12));
    }
    let labels: Vec<String> = table.rows[..4]
        .iter()
        .map(|r| if let Cell::Text(s) = &r[1] { s.clone() } else { String::new() })
        .collect();
    assert_eq!(labels, ["E1", "E2", "E3", "E4"]);
}

#[test]
fn spectrum_includes_singlet_and_triplet() {
    let mut cfg = RunConfig::default();
    cfg.apply_overrides(["gamma=0.8", "n_range=-2..=0"]).unwrap();
    let table = run_spectrum(&cfg).unwrap();
    assert_eq!(table.rows.len(), 1 + 3 + 4);
    assert!(numbers(&table, 4).iter().all(|&d| d < 1e-8));
}

#[test]
fn spectrum_other_dimensions_are_numeric_only() {
    for (dim, range) in [("2", "0..=2"), ("3", "0..=1")] {
        let mut cfg = RunConfig::default();
        cfg.apply_overrides([format!("dimension={dim}").as_str(), format!("n_range={range}").as_str()]).unwrap();
        let table = run_spectrum(&cfg).unwrap();
        assert!(!table.rows.is_empty());
        assert!(table.rows.iter().all(|r| r[2] == Cell::Empty));
    }
}

#[test]
fn verify_is_reproducible() {
    let mut cfg = RunConfig::default();
    cfg.apply_overrides(["draws=200", "seed=7"]).unwrap();
    let (a, pass_a) = run_verify(&cfg);
    let (b, _) = run_verify(&cfg);
    assert!(pass_a, "{}", a.to_csv());
    assert_eq!(a.render(Format::Csv), b.render(Format::Csv));
    assert!(a.rows.iter().any(|r| r[2] == Cell::from("d=3 blocks vs cartesian oracle")));
}

#[test]
fn both_initial_isospinors_show_structure_near_the_mass() {
    for (theta, global) in [("0", false), ("0.7853981633974483", true)] {
        let mut cfg = RunConfig::default();
        cfg.apply_overrides([format!("theta={theta}").as_str()]).unwrap();
        let m = cfg.params.m;
        let sweep = run_sweep(&cfg).unwrap();
        let mean = sweep.mean_entropy();
        let bump = (1..mean.len() - 1)
            .any(|i| mean[i] > mean[i - 1] && mean[i] > mean[i + 1] && (sweep.gammas[i] - m).abs() <= 1.0);
        assert!(bump, "theta={theta}: no local entropy maximum near gamma = m");
        if global {
            let best = (0..mean.len()).max_by(|&a, &b| mean[a].total_cmp(&mean[b])).unwrap();
            assert!((sweep.gammas[best] - m).abs() <= 1.0);
        }
    }
}
