use matpfd_cli::render::json;
use matpfd_cli::{parse_matrix, render_matrix_file};
use matpfd_core::scalar::parse_rational;
use matpfd_core::{GaussianRational, Matrix, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(rng: &mut ChaCha8Rng) -> Matrix<Rational> {
    let n = rng.gen_range(1..=6);
    let data = (0..n * n)
        .map(|_| {
            let num: i64 = rng.gen_range(-1_000_000_000_000..=1_000_000_000_000);
            let den: i64 = rng.gen_range(1..=1000);
            Rational::new(num.into(), den.into())
        })
        .collect();
    Matrix::new(n, n, data).unwrap()
}

#[test]
fn matrix_file_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let m = random_matrix(&mut rng);
        assert_eq!(parse_matrix(&render_matrix_file(&m)).unwrap(), m);
    }
}

#[test]
fn json_scalars_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let m = random_matrix(&mut rng);
        let v = json::matrix(&m);
        let text = serde_json::to_string(&v).unwrap();
        let back: Vec<Vec<String>> = serde_json::from_str(&text).unwrap();
        let parsed: Vec<Vec<Rational>> = back
            .iter()
            .map(|r| r.iter().map(|x| parse_rational(x).unwrap()).collect())
            .collect();
        assert_eq!(Matrix::from_rows(parsed).unwrap(), m);

        let g = GaussianRational::new(m.data()[0].clone(), Rational::new(1.into(), 3.into()));
        let obj = json::scalar(&g);
        let re = parse_rational(obj["re"].as_str().unwrap()).unwrap();
        let im = parse_rational(obj["im"].as_str().unwrap()).unwrap();
        assert_eq!(GaussianRational::new(re, im), g);
    }
}
