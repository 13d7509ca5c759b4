//! End-to-end flows through the public API: the alpha family interpolating
//! between nearest-centroid and LDA, and the three error views (exact,
//! estimated, asymptotic) agreeing on a friendly regime.

use nalgebra::{DMatrix, DVector};

use alphatune::{
    compute_sample_statistics, empirical_error, expected_error_exact, fit_lda,
    fit_nearest_centroid, grid_search_alpha, parameterize, sample_dataset, sample_mixture,
    AlphaObjective, DeEvaluator, GaussianClassModel, GeEvaluator, LinearDiscriminant,
};

fn ar1_model(p: usize, phi: f64, separation: f64) -> GaussianClassModel {
    let sigma = DMatrix::from_fn(p, p, |i, j| phi.powi((i as i32 - j as i32).abs()));
    let mu0 = DVector::zeros(p);
    let mu1 = DVector::from_element(p, separation / (p as f64).sqrt());
    GaussianClassModel::new(mu0, mu1, sigma.clone(), sigma, 0.5, 0.5).unwrap()
}

#[test]
fn alpha_family_interpolates_centroid_and_lda() {
    let model = ar1_model(25, 0.6, 2.0);
    let data = sample_dataset(&model, 100, 100, 91).unwrap();
    let stats = compute_sample_statistics(&data);
    let lda = fit_lda(&stats).unwrap();
    let centroid = fit_nearest_centroid(&stats).unwrap();

    // alpha = 0 realizes the nearest-centroid direction (rescaled)
    let at_zero = parameterize(&lda.w, &stats, 0.0).unwrap().realized;
    let cos = at_zero.w.dot(&centroid.w) / (at_zero.w.norm() * centroid.w.norm());
    assert!(
        (cos - 1.0).abs() < 1e-12,
        "alpha = 0 direction should match the centroid rule, cos = {cos}"
    );

    // alpha = 1 reproduces the LDA weight vector
    let at_one = parameterize(&lda.w, &stats, 1.0).unwrap().realized;
    assert!(
        (&at_one.w - &lda.w).norm() <= 1e-10 * lda.w.norm(),
        "alpha = 1 should reproduce the base weight"
    );

    // and its decisions agree with LDA on fresh data (equal class counts, so
    // the prior-log-ratio term of the LDA intercept vanishes)
    let test = sample_dataset(&model, 400, 400, 92).unwrap();
    let err_lda = empirical_error(&lda, &test).unwrap();
    let err_at_one = empirical_error(&at_one, &test).unwrap();
    assert_eq!(err_lda, err_at_one);
}

#[test]
fn error_views_agree_in_a_friendly_regime() {
    let model = ar1_model(60, 0.3, 2.5);
    let (n0, n1) = (150, 150);
    let data = sample_dataset(&model, n0, n1, 17).unwrap();
    let stats = compute_sample_statistics(&data);
    let lda = fit_lda(&stats).unwrap();
    let grid: Vec<f64> = (0..=6).map(|k| 0.25 * k as f64).collect();

    let (alpha_exact, exact_curve) =
        grid_search_alpha(&lda.w, &stats, &grid, &AlphaObjective::ExactError(&model)).unwrap();
    let ge = GeEvaluator::new(&stats, true).unwrap();
    let de = DeEvaluator::new(&model, n0, n1, true).unwrap();
    let (labels, x) = sample_mixture(&model, 20_000, 18).unwrap();

    for &(alpha, exact) in &exact_curve {
        let estimated = ge.epsilon(alpha).unwrap();
        assert!(
            (estimated - exact).abs() <= 0.03,
            "estimate {estimated:.4} vs exact {exact:.4} at alpha = {alpha}"
        );
        let asymptotic = de.epsilon(alpha).unwrap();
        assert!(
            (asymptotic - exact).abs() <= 0.03,
            "asymptotic {asymptotic:.4} vs exact {exact:.4} at alpha = {alpha}"
        );

        let disc = parameterize(&lda.w, &stats, alpha).unwrap().realized;
        let mut wrong = 0usize;
        for (j, &label) in labels.iter().enumerate() {
            let predicted = u8::from(disc.w.dot(&x.column(j)) + disc.w0 > 0.0);
            if predicted != label {
                wrong += 1;
            }
        }
        let empirical = wrong as f64 / labels.len() as f64;
        assert!(
            (empirical - exact).abs() <= 0.02,
            "empirical {empirical:.4} vs exact {exact:.4} at alpha = {alpha}"
        );
    }

    // tuning by the G-estimate lands near the exact-error optimum
    let (alpha_ge, _) = grid_search_alpha(
        &lda.w,
        &stats,
        &grid,
        &AlphaObjective::GEstimatedError {
            assume_common_cov: true,
        },
    )
    .unwrap();
    assert!(
        (alpha_ge - alpha_exact).abs() <= 0.5,
        "estimated optimum {alpha_ge} far from exact optimum {alpha_exact}"
    );
}

#[test]
fn known_weight_tuning_beats_the_base_weight() {
    // a deliberately noisy weight: the true LDA direction plus a strong
    // orthogonal perturbation; MMSE tuning must not do worse than alpha = 1
    let model = ar1_model(40, 0.5, 2.0);
    let mu = model.mean_diff();
    let w_opt = model
        .sigma0
        .clone()
        .cholesky()
        .unwrap()
        .solve(&mu);
    let mut perturbation = DVector::zeros(40);
    perturbation[7] = 1.0;
    perturbation[23] = -1.5;
    let p_perp = &perturbation - &mu * (perturbation.dot(&mu) / mu.norm_squared());
    let w_noisy = &w_opt + &p_perp * (2.0 * w_opt.norm() / p_perp.norm());

    let tuned = alphatune::modified_discriminant_known_means(&w_noisy, &model).unwrap();
    let base = LinearDiscriminant::new(w_noisy.clone(), -w_noisy.dot(&model.center())).unwrap();
    let err_tuned = expected_error_exact(&tuned, &model).unwrap();
    let err_base = expected_error_exact(&base, &model).unwrap();
    let err_opt = expected_error_exact(
        &LinearDiscriminant::new(w_opt.clone(), -w_opt.dot(&model.center())).unwrap(),
        &model,
    )
    .unwrap();
    assert!(
        err_tuned < err_base - 1e-6,
        "tuning should strictly improve the noisy weight ({err_tuned:.4} vs {err_base:.4})"
    );
    assert!(
        err_tuned >= err_opt - 1e-12,
        "no tuned weight can beat the optimal rule"
    );
}
