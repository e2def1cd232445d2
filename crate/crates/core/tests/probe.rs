use critgrass_core::critical::meas_critical;
use critgrass_core::perm::Bap;
#[test]
fn probe_path_limit() {
    let f = Bap::top_cell(2, 4);
    // v3, v4 -> v1-group: theta_3, theta_4 -> pi while theta_2 = pi/2.
    for eps in [1e-2, 1e-4, 1e-6] {
        let pi = std::f64::consts::PI;
        let theta = [0.0, pi / 2.0, pi - 2.0 * eps, pi - eps];
        let m = meas_critical(&f, &theta).unwrap();
        let v: Vec<(String, f64)> = m.coords.iter().map(|(s, v)| (format!("{s:?}"), *v)).collect();
        println!("eps={eps}: {v:?}");
    }
}
