//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use pcakit::analysis::{best_fit_line, biplot_data, kmeans_restarts, matched_accuracy};
use pcakit::io::{
    default_templates, embedded_height_weight, load_csv, load_pgm, save_pgm,
    synthesize_spikes_with_jitter, GaussianStream,
};
use pcakit::pca::{center, covariance};
use pcakit::{symmetric_eigen, GrayImage, Matrix, Orientation, PcaModel};

/// Collects sub-check failures for one criterion.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checks {
    fn near(&mut self, what: &str, got: f64, want: f64, tol: f64) {
        if (got - want).abs() > tol || got.is_nan() {
            self.failures
                .push(format!("{what}: got {got:.6}, want {want} +/- {tol}"));
        }
    }

    fn that(&mut self, what: &str, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(format!("{what}: {}", detail()));
        }
    }

    fn within(&mut self, what: &str, elapsed: Duration, limit: Duration) {
        self.note(format!("{what} {:.1} ms", elapsed.as_secs_f64() * 1e3));
        self.that(what, elapsed < limit, || {
            format!("took {elapsed:?}, limit {limit:?}")
        });
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }
}

fn same_direction(a: &[f64], b: &[f64], tol: f64) -> bool {
    let plus = a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol);
    let minus = a.iter().zip(b).all(|(x, y)| (x + y).abs() <= tol);
    plus || minus
}

fn iris_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/iris.csv")
}

fn height_weight(c: &mut Checks) {
    let start = Instant::now();
    let data = embedded_height_weight();
    let model = PcaModel::fit(data.data()).unwrap();
    let line = best_fit_line(&model).unwrap();
    let elapsed = start.elapsed();

    c.near("mean height", model.mean()[0], 70.06, 0.005);
    c.near("mean weight", model.mean()[1], 154.25, 0.005);
    let cov = covariance(&center(data.data(), model.mean()).unwrap()).unwrap();
    c.near("var height", cov[(0, 0)], 3.26, 0.005);
    c.near("cov height/weight", cov[(0, 1)], 21.72, 0.005);
    c.near("var weight", cov[(1, 1)], 188.96, 0.005);
    c.near("lambda1", model.eigenvalues()[0], 191.46, 0.01);
    c.near("lambda2", model.eigenvalues()[1], 0.76, 0.01);
    let v1 = model.component(0);
    c.that("v1", same_direction(&v1, &[0.11, 0.99], 0.01), || {
        format!("got {v1:?}")
    });
    let v2 = model.component(1);
    c.that("v2", same_direction(&v2, &[-0.99, 0.11], 0.01), || {
        format!("got {v2:?}")
    });
    c.near("slope", line.slope, 9.0, 0.5);
    let ratio = model.spectral_ratio(1).unwrap();
    c.that("ratio(1) > 0.99", ratio > 0.99, || format!("got {ratio}"));
    c.note(format!(
        "mean=({:.4}, {:.4}) lambda=({:.4}, {:.4}) slope={:.3}",
        model.mean()[0],
        model.mean()[1],
        model.eigenvalues()[0],
        model.eigenvalues()[1],
        line.slope
    ));
    c.within("runtime", elapsed, Duration::from_millis(100));
}

fn iris(c: &mut Checks) {
    let start = Instant::now();
    let data = load_csv(iris_path(), Orientation::RowsAreSamples).unwrap();
    let model = PcaModel::fit(data.data()).unwrap();
    let biplot = biplot_data(&model, data.data(), data.variable_names(), 2).unwrap();
    let elapsed = start.elapsed();

    for (k, want) in [4.23, 0.24, 0.08, 0.02].into_iter().enumerate() {
        c.near(
            &format!("lambda{}", k + 1),
            model.eigenvalues()[k],
            want,
            0.01,
        );
    }
    c.near("ratio(2)", model.spectral_ratio(2).unwrap(), 0.9777, 0.001);
    let pc1 = [0.3614, -0.0845, 0.8567, 0.3583];
    let pc2 = [0.6566, 0.7302, -0.1734, -0.0755];
    let got1 = biplot.loadings.column(0);
    let got2 = biplot.loadings.column(1);
    c.that("PC1 loadings", same_direction(&got1, &pc1, 0.01), || {
        format!("got {got1:?}")
    });
    c.that("PC2 loadings", same_direction(&got2, &pc2, 0.01), || {
        format!("got {got2:?}")
    });
    let petal_len = biplot.loadings.row(2);
    let petal_wid = biplot.loadings.row(3);
    let dot: f64 = petal_len.iter().zip(petal_wid).map(|(a, b)| a * b).sum();
    let norm = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let cosine = dot / (norm(petal_len) * norm(petal_wid));
    c.that("petal loading cosine > 0.95", cosine > 0.95, || {
        format!("{cosine}")
    });
    c.note(format!(
        "lambda={:.4?} ratio(2)={:.4} petal cosine={cosine:.4}",
        model.eigenvalues(),
        model.spectral_ratio(2).unwrap()
    ));
    c.within("runtime", elapsed, Duration::from_millis(500));
}

fn random_symmetric(g: &mut GaussianStream, m: usize) -> Matrix {
    let scale = 10f64.powf(4.0 * g.uniform() - 2.0);
    let mut data = vec![0.0; m * m];
    for i in 0..m {
        for j in i..m {
            let v = scale * g.next_normal();
            data[i * m + j] = v;
            data[j * m + i] = v;
        }
    }
    Matrix::new(m, m, data).unwrap()
}

fn eigen_invariants(c: &mut Checks) {
    let mut g = GaussianStream::new(2024);
    let mut worst = [0.0f64; 4];
    let mut two_by_two = 0;
    let start = Instant::now();
    for trial in 0..1000 {
        let m = 1 + trial % 12;
        let s = random_symmetric(&mut g, m);
        let eig = symmetric_eigen(&s).unwrap();
        let norm = s.frobenius_norm().max(1.0);

        let v = eig.vectors();
        let gram = v.transpose().matmul(v).unwrap();
        let ortho = gram.max_abs_diff(&Matrix::identity(m)).unwrap();
        let resid = (0..m)
            .map(|k| {
                let vk = Matrix::column_vector(&eig.vector(k)).unwrap();
                let sv = s.matmul(&vk).unwrap();
                let lv = vk.scale(eig.values()[k]).unwrap();
                sv.max_abs_diff(&lv).unwrap()
            })
            .fold(0.0, f64::max)
            / norm;
        let trace = (s.trace() - eig.values().iter().sum::<f64>()).abs() / s.trace().abs().max(1.0);
        worst[0] = worst[0].max(ortho);
        worst[1] = worst[1].max(resid);
        worst[2] = worst[2].max(trace);
        c.that(
            "sorted",
            eig.values().windows(2).all(|w| w[0] >= w[1]),
            || format!("trial {trial}: {:?}", eig.values()),
        );

        if m == 2 {
            two_by_two += 1;
            let (a, b, d) = (s[(0, 0)], s[(0, 1)], s[(1, 1)]);
            let mid = 0.5 * (a + d);
            let rad = (0.25 * (a - d) * (a - d) + b * b).sqrt();
            let err = (eig.values()[0] - (mid + rad))
                .abs()
                .max((eig.values()[1] - (mid - rad)).abs());
            worst[3] = worst[3].max(err);
        }
    }
    let elapsed = start.elapsed();
    c.that("orthonormality <= 1e-10", worst[0] <= 1e-10, || {
        format!("{:e}", worst[0])
    });
    c.that("residual <= 1e-10*max(1,|S|)", worst[1] <= 1e-10, || {
        format!("{:e}", worst[1])
    });
    c.that("trace <= 1e-9", worst[2] <= 1e-9, || {
        format!("{:e}", worst[2])
    });
    c.that("2x2 closed form <= 1e-10", worst[3] <= 1e-10, || {
        format!("{:e}", worst[3])
    });
    c.note(format!(
        "1000 matrices ({two_by_two} of size 2), worst ortho={:.1e} resid={:.1e} trace={:.1e} 2x2={:.1e}",
        worst[0], worst[1], worst[2], worst[3]
    ));
    c.within("runtime", elapsed, Duration::from_secs(5));
}

fn sample_variance(row: &[f64]) -> f64 {
    let n = row.len() as f64;
    let mean = row.iter().sum::<f64>() / n;
    row.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)
}

fn pipeline_identities(c: &mut Checks) {
    let mut g = GaussianStream::new(77);
    let mut worst = [0.0f64; 3];
    for trial in 0..100 {
        let m = 1 + trial % 10;
        let n = m + 2 + (g.uniform() * (49 - m) as f64) as usize;
        let scales: Vec<f64> = (0..m).map(|_| 0.2 + 5.0 * g.uniform()).collect();
        let data = (0..m * n)
            .map(|k| 3.0 + scales[k / n] * g.next_normal())
            .collect();
        let x = Matrix::new(m, n, data).unwrap();
        let model = PcaModel::fit(&x).unwrap();

        let full = model.reconstruct(&model.project(&x, m).unwrap()).unwrap();
        worst[0] = worst[0].max(full.sub(&x).unwrap().frobenius_norm());

        let scores = model.project(&x, m).unwrap();
        for k in 0..m {
            let lambda = model.eigenvalues()[k];
            let rel = (sample_variance(scores.coords().row(k)) - lambda).abs() / lambda;
            worst[1] = worst[1].max(rel);
        }

        let mut previous = 0.0;
        for r in 1..=m {
            let ratio = model.spectral_ratio(r).unwrap();
            c.that("monotone ratio", ratio >= previous && ratio <= 1.0, || {
                format!("trial {trial} r={r}: {ratio} after {previous}")
            });
            previous = ratio;
            if r < m {
                let back = model.reconstruct(&model.project(&x, r).unwrap()).unwrap();
                let err2 = back.sub(&x).unwrap().frobenius_norm().powi(2);
                let tail = (n as f64 - 1.0) * model.eigenvalues()[r..].iter().sum::<f64>();
                worst[2] = worst[2].max((err2 - tail).abs() / tail);
            }
        }
    }
    c.that("round trip <= 1e-9", worst[0] <= 1e-9, || {
        format!("{:e}", worst[0])
    });
    c.that("score variance <= 1e-8 rel", worst[1] <= 1e-8, || {
        format!("{:e}", worst[1])
    });
    c.that("truncation error <= 1e-8 rel", worst[2] <= 1e-8, || {
        format!("{:e}", worst[2])
    });
    c.note(format!(
        "100 trials, worst round-trip={:.1e} variance={:.1e} tail={:.1e}",
        worst[0], worst[1], worst[2]
    ));
}

/// 128 plus five integer outer products: integral pixels of exact rank 5
/// after centering.
fn rank_five_image(size: usize) -> GrayImage {
    let mut g = GaussianStream::new(5);
    let mut small = || (g.uniform() * 5.0).floor() - 2.0;
    let factors: Vec<(Vec<f64>, Vec<f64>)> = (0..5)
        .map(|_| {
            let u = (0..size).map(|_| small()).collect();
            let v = (0..size).map(|_| small()).collect();
            (u, v)
        })
        .collect();
    let pixels = (0..size * size)
        .map(|k| {
            let (i, j) = (k / size, k % size);
            128.0 + factors.iter().map(|(u, v)| u[i] * v[j]).sum::<f64>()
        })
        .collect();
    GrayImage::new(size, size, pixels).unwrap()
}

fn textured_image(size: usize) -> GrayImage {
    let mut g = GaussianStream::new(9);
    let pixels = (0..size * size)
        .map(|k| {
            let (i, j) = ((k / size) as f64, (k % size) as f64);
            (128.0 + 70.0 * (i / 7.0).sin() * (j / 11.0).cos() + 12.0 * g.next_normal())
                .round()
                .clamp(0.0, 255.0)
        })
        .collect();
    GrayImage::new(size, size, pixels).unwrap()
}

fn run_cli(args: &[&std::ffi::OsStr]) -> (bool, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_pcakit"))
        .args(args)
        .output()
        .expect("pcakit binary");
    (out.status.success(), out.stdout)
}

/// Cumulative spectral ratio column of the eigenvalue sidecar.
fn sidecar_ratios(path: &Path) -> Vec<f64> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect()
}

fn compress(input: &Path, r: usize, out: &Path) -> (bool, Vec<f64>, GrayImage) {
    let r = r.to_string();
    let (ok, _) = run_cli(&[
        "compress".as_ref(),
        input.as_os_str(),
        "-r".as_ref(),
        r.as_ref(),
        "-o".as_ref(),
        out.as_os_str(),
    ]);
    let ratios = sidecar_ratios(&out.with_extension("eigenvalues.csv"));
    (ok, ratios, load_pgm(out).unwrap())
}

fn max_pixel_diff(a: &GrayImage, b: &GrayImage) -> f64 {
    a.pixels()
        .iter()
        .zip(b.pixels())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn image_compression(c: &mut Checks) {
    let dir = tempfile::tempdir().unwrap();
    let rank5 = dir.path().join("rank5.pgm");
    let image = rank_five_image(64);
    save_pgm(&image, &rank5).unwrap();

    let start = Instant::now();
    let (ok, ratios, restored) = compress(&rank5, 5, &dir.path().join("rank5_r5.pgm"));
    let elapsed = start.elapsed();
    c.that("compress r=5 exit", ok, String::new);
    c.near("ratio(5) on rank-5 image", ratios[4], 1.0, 1e-9);
    let diff = max_pixel_diff(&image, &restored);
    c.that("rank-5 reconstruction exact", diff == 0.0, || {
        format!("max diff {diff}")
    });

    let textured = dir.path().join("textured.pgm");
    let image = textured_image(96);
    save_pgm(&image, &textured).unwrap();
    let mut at = Vec::new();
    for r in [3, 30, 60, 90] {
        let (ok, ratios, _) = compress(&textured, r, &dir.path().join(format!("t{r}.pgm")));
        c.that("compress exit", ok, || format!("r={r}"));
        at.push(ratios[r - 1]);
    }
    c.that(
        "ratio strictly increasing over r=3,30,60,90",
        at.windows(2).all(|w| w[0] < w[1]),
        || format!("{at:?}"),
    );
    let (_, _, full) = compress(&textured, 96, &dir.path().join("full.pgm"));
    let diff = max_pixel_diff(&image, &full);
    c.that("full rank within 1 grey level", diff <= 1.0, || {
        format!("max diff {diff}")
    });
    c.note(format!(
        "rank-5 ratio(5)={:.12}, textured ratios {at:.4?}, full-rank max diff {diff}",
        ratios[4]
    ));
    c.within("runtime", elapsed, Duration::from_secs(2));
}

fn spike_sorting(c: &mut Checks) {
    const NOISE: f64 = 5.0;
    let templates = default_templates();
    let separation = templates[0]
        .iter()
        .zip(&templates[1])
        .map(|(a, b)| (a - b).powi(2))
        .sum::<f64>()
        .sqrt();
    c.that(
        "template separation >= 10x noise",
        separation >= 10.0 * NOISE,
        || format!("{separation}"),
    );

    let start = Instant::now();
    let set = synthesize_spikes_with_jitter(&templates, &[1000, 1000], NOISE, 0.15, 0).unwrap();
    let model = PcaModel::fit(&set.waveforms).unwrap();
    let scores = model.project(&set.waveforms, 2).unwrap();
    let clusters = kmeans_restarts(scores.coords(), 2, 0, 20).unwrap();
    let accuracy = matched_accuracy(&clusters.assignments, &set.labels);
    let elapsed = start.elapsed();

    let l = model.eigenvalues();
    let ratio = l[1] / l[2];
    c.that("accuracy >= 0.95", accuracy >= 0.95, || {
        format!("{accuracy}")
    });
    c.that("lambda2/lambda3 >= 10", ratio >= 10.0, || {
        format!("{ratio}")
    });
    c.note(format!(
        "N=2000 seed=0 separation={separation:.2} accuracy={accuracy:.4} lambda2/lambda3={ratio:.2}"
    ));
    c.within("runtime", elapsed, Duration::from_secs(2));
}

/// Minimum two-cluster inertia over every bipartition.
fn exhaustive_two_means(points: &Matrix) -> f64 {
    let n = points.cols();
    let mut best = f64::INFINITY;
    for mask in 1u32..(1 << (n - 1)) {
        let mut total = 0.0;
        for side in [true, false] {
            let members: Vec<usize> = (0..n).filter(|&j| ((mask >> j) & 1 == 1) == side).collect();
            for i in 0..points.rows() {
                let row = points.row(i);
                let mean = members.iter().map(|&j| row[j]).sum::<f64>() / members.len() as f64;
                total += members
                    .iter()
                    .map(|&j| (row[j] - mean).powi(2))
                    .sum::<f64>();
            }
        }
        best = best.min(total);
    }
    best
}

fn kmeans_oracle(c: &mut Checks) {
    let mut g = GaussianStream::new(31);
    let mut worst = 0.0f64;
    for trial in 0..50 {
        let n = 2 + trial % 7;
        let data = (0..2 * n).map(|_| 3.0 * g.next_normal()).collect();
        let points = Matrix::new(2, n, data).unwrap();
        let got = kmeans_restarts(&points, 2, trial as u64, 20)
            .unwrap()
            .inertia;
        let want = exhaustive_two_means(&points);
        worst = worst.max((got - want).abs());
    }
    c.that(
        "inertia matches exhaustive optimum within 1e-9",
        worst <= 1e-9,
        || format!("worst gap {worst:e}"),
    );
    c.note(format!("50 instances, n in 2..=8, worst gap {worst:.1e}"));
}

type Snapshot = (bool, Vec<u8>, Vec<(String, Vec<u8>)>);

/// Stdout plus every output file, sorted by name.
fn snapshot(args: &[&std::ffi::OsStr], dir: &Path) -> Snapshot {
    let (ok, stdout) = run_cli(args);
    let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    files.sort();
    (ok, stdout, files)
}

fn determinism(c: &mut Checks) {
    let tmp = tempfile::tempdir().unwrap();
    let image = tmp.path().join("in.pgm");
    save_pgm(&textured_image(32), &image).unwrap();
    let iris = iris_path();

    let cases: Vec<(&str, Vec<&std::ffi::OsStr>)> = vec![
        (
            "fit",
            vec![
                "fit".as_ref(),
                iris.as_os_str(),
                "-r".as_ref(),
                "2".as_ref(),
            ],
        ),
        ("demo-heightweight", vec!["demo-heightweight".as_ref()]),
        (
            "compress",
            vec![
                "compress".as_ref(),
                image.as_os_str(),
                "-r".as_ref(),
                "4".as_ref(),
            ],
        ),
        ("biplot", vec!["biplot".as_ref(), iris.as_os_str()]),
        ("spikes", vec!["spikes".as_ref()]),
    ];
    for (name, mut args) in cases {
        let out = tmp.path().join(name);
        fs::create_dir_all(&out).unwrap();
        let target = if name == "compress" {
            out.join("out.pgm")
        } else {
            out.clone()
        };
        if name != "demo-heightweight" {
            args.push("-o".as_ref());
            args.push(target.as_os_str());
        }
        let first = snapshot(&args, &out);
        let second = snapshot(&args, &out);
        c.that(
            &format!("{name} succeeds"),
            first.0 && second.0,
            String::new,
        );
        c.that(
            &format!("{name} byte-identical"),
            first == second,
            String::new,
        );
    }
    c.note("fit, demo-heightweight, compress, biplot, spikes run twice each".into());
}

type Criterion = (&'static str, fn(&mut Checks));

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("height/weight worked example", height_weight),
        ("iris eigenvalues, variance ratio and loadings", iris),
        (
            "eigensolver invariants on random symmetric matrices",
            eigen_invariants,
        ),
        ("pipeline identities on random data", pipeline_identities),
        ("image compression", image_compression),
        ("spike sorting", spike_sorting),
        ("k-means against exhaustive oracle", kmeans_oracle),
        ("cli determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let mut c = Checks::default();
        check(&mut c);
        let status = if c.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "criterion {}: {status} {name} [{}]",
            i + 1,
            c.notes.join("; ")
        );
        for f in &c.failures {
            println!("    failed: {f}");
        }
        failed += usize::from(!c.failures.is_empty());
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
