use toeplab_core::bergman::*;
use toeplab_core::geometry::Point;
use toeplab_core::linalg::OperatorMatrix;
use toeplab_core::Space;
use num_complex::Complex;

fn main() {
    // n=2 dv moments: true value n/(n+k)
    let rule2 = DiskQuad::<f64>::new(2, 6, DiskMeasure::Volume).unwrap();
    for k in 0..=6usize {
        let got: f64 = rule2.nodes.iter().zip(&rule2.weights)
            .map(|(z, w)| w * z.norm_sq().powi(k as i32)).sum();
        println!("k={} got={:.15} n/(n+k)={:.15}", k, got, 2.0/(2.0+k as f64));
    }
    // dlambda n=2 |w1|^2 vs closed form
    let rho = 1.0f64.tanh();
    let rl = DiskQuad::<f64>::new(2, 4, DiskMeasure::InvariantTruncated { rho_max: rho }).unwrap();
    let got = rl.integrate(|z| Complex::new(z.0[0].norm_sqr(), 0.0));
    let x = rho * rho;
    let f = |u: f64| 0.5 / (1.0 - u).powi(2) - 2.0 / (1.0 - u) - (1.0 - u).ln();
    println!("dlambda |w1|^2: got={:.12} want={:.12}", got.re, f(x) - f(0.0));
    // U^2 defect at various restrictions
    let pr = BergmanParams::new(2.0f64, 1, 24, 1.0).unwrap();
    let uz = pr.u_matrix(&Point::re1(0.5)).unwrap();
    let sq = uz.matmul(&uz).unwrap();
    let id = OperatorMatrix::<f64>::identity(Space::Bergman, 1, 24);
    let defect = sq.sub(&id).unwrap();
    for d in [8usize, 10, 12, 16, 20, 24] {
        println!("U^2-I restrict {}: {:.3e}", d, defect.restrict(d).norm2());
    }
    let adj = uz.adjoint().sub(&uz).unwrap();
    println!("U*-U restrict 12: {:.3e}", adj.restrict(12).norm2());
    // N=30 comparison
    let pr30 = BergmanParams::new(2.0f64, 1, 30, 1.0).unwrap();
    let u30 = pr30.u_matrix(&Point::re1(0.5)).unwrap();
    let sq30 = u30.matmul(&u30).unwrap();
    let id30 = OperatorMatrix::<f64>::identity(Space::Bergman, 1, 30);
    let d30 = sq30.sub(&id30).unwrap();
    println!("N=30 U^2-I restrict 12: {:.3e}", d30.restrict(12).norm2());
}
