use toeplab_core::bergman::*;
use toeplab_core::geometry::{mobius, Point};
use num_complex::Complex;

fn main() {
    let pr = BergmanParams::new(2.0f64, 1, 24, 1.0).unwrap();
    let z = Point::re1(0.5);
    let uz = pr.u_matrix(&z).unwrap();
    // column norms: |U e_b|_2 should be ~1 (isometry) until truncation bites
    for b in [0usize, 1, 2, 4, 8, 12, 16, 20, 24] {
        let col = uz.mat.column(b);
        let nrm: f64 = col.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        println!("|U e_{}| = {:.6}", b, nrm);
    }
    // oracle for column 1 entries: <U e_1, e_a> by direct high-degree quadrature
    let rule = DiskQuad::<f64>::new(1, 200, DiskMeasure::Volume).unwrap();
    let b1 = toeplab_core::multiindex::MultiIndex(vec![1]);
    for a_deg in [0usize, 1, 2, 3] {
        let a = toeplab_core::multiindex::MultiIndex(vec![a_deg as u32]);
        let got = rule.integrate(|w| {
            let phi = mobius(&z, w).unwrap();
            pr.basis_eval(&b1, &phi) * normalized_kernel_value(&z, w, 1)
                * pr.basis_eval(&a, w).conj()
        });
        println!("oracle <U e_1, e_{}> = {:.10} {:+.10}i   assembled {:.10} {:+.10}i",
            a_deg, got.re, got.im, uz.mat[(a_deg,1)].re, uz.mat[(a_deg,1)].im);
    }
    // analytic: U e_1 (w) = sqrt(2) phi(w) k_z(w); series coeffs of
    // (1-|z|^2)(z-w)/(1-wz)^3 * sqrt2, <.,e_k> = coeff_k/sqrt(k+1)
    let zz = 0.5f64;
    let s = 1.0 - zz * zz;
    for k in 0..4usize {
        // (z - w) * sum C(j+2,2) z^j w^j: coeff_k = z*C(k+2,2)z^k - C(k+1,2)z^{k-1}
        let c2 = |m: usize| (m as f64 + 2.0) * (m as f64 + 1.0) / 2.0;
        let coeff = if k == 0 { zz * c2(0) * 1.0 }
            else { zz * c2(k) * zz.powi(k as i32) - c2(k - 1) * zz.powi(k as i32 - 1) };
        let val = s * 2.0f64.sqrt() * coeff / ((k as f64 + 1.0).sqrt());
        println!("analytic <U e_1, e_{}> = {:.10}", k, val);
    }
}
