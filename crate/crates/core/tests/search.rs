use chowla::search::{search_lambda, search_mu, SearchOptions};

fn opts() -> SearchOptions {
    SearchOptions { tol: 1e-6, top: 10, ..SearchOptions::default() }
}

#[test]
fn widening_the_range_never_lowers_the_top_score() {
    for n in 2..=4 {
        let mut prev = f64::NEG_INFINITY;
        for max_freq in n as u64..=9 {
            let top = search_lambda(n, max_freq, &opts()).unwrap()[0].score.midpoint();
            assert!(top >= prev - 2e-6, "n = {n}, max_freq = {max_freq}");
            prev = top;
        }
    }
    for n in 3..=4 {
        let mut prev = f64::NEG_INFINITY;
        for max_exp in n as u64 - 1..=7 {
            let top = search_mu(n, max_exp, &opts()).unwrap()[0].score.midpoint();
            assert!(top >= prev - 2e-6, "n = {n}, max_exp = {max_exp}");
            prev = top;
        }
    }
}

#[test]
fn results_are_ranked_and_deterministic() {
    let a = search_mu(4, 7, &SearchOptions { threads: 1, ..opts() }).unwrap();
    let b = search_mu(4, 7, &SearchOptions { threads: 3, ..opts() }).unwrap();
    assert_eq!(a, b);
    for (i, r) in a.iter().enumerate() {
        assert_eq!(r.rank, i + 1);
    }
    for w in a.windows(2) {
        let (x, y) = (&w[0], &w[1]);
        assert!(x.score.midpoint() >= y.score.midpoint() - 1e-6);
    }
}

#[test]
fn top_five_term_cosine_sum() {
    let r = search_lambda(5, 8, &opts()).unwrap();
    assert_eq!(r[0].tuple, vec![1, 2, 4, 5, 6]);
    assert!(r[0].score.contains(-1.627461, 5e-7));
}
