use toeplab_core::fock::FockParams;
use toeplab_core::geometry::Point;
use toeplab_core::linalg::OperatorMatrix;
use toeplab_core::Space;

fn main() {
    let pr = FockParams::new(1.0f64, 2.0, 1, 40).unwrap();
    let wz = pr.weyl_matrix(&Point::re1(1.0)).unwrap();
    let gram = wz.adjoint().matmul(&wz).unwrap();
    let id = OperatorMatrix::<f64>::identity(Space::Fock, 1, 40);
    let defect = gram.sub(&id).unwrap();
    // one-sided column restriction
    println!("one-sided d=20: {:.3e}", defect.norm2_restricted(20));
    // two-sided block
    for d in [10usize, 16, 20, 24] {
        let k = toeplab_core::multiindex::Basis::new(1, 40).len_through_degree(d);
        let block = defect.mat.view((0,0),(k,k)).into_owned();
        let nrm = toeplab_core::linalg::spectral_norm(&block);
        println!("two-sided d={}: {:.3e}", d, nrm);
    }
}
