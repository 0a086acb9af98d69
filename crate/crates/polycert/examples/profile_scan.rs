use num_bigint::BigInt;
use polycert::arith::FactorPolicy;
use polycert::criteria::*;
use polycert::newton::best_delta;
use polycert::Polynomial;
use std::time::Instant;

fn main() {
    let f = Polynomial::from_i64(&[20449, -3146, 121, 13442, -1034, 0, 2209]);
    let policy = FactorPolicy::default();
    let delta = best_delta(&f, &policy);
    let t_all = Instant::now();
    let mut slow = 0;
    for m in 401i64..=500 {
        let t = Instant::now();
        let _ = check_theorem1(&f, &BigInt::from(m), &policy).unwrap();
        let _ = check_theorem2(&f, &BigInt::from(m), &policy).unwrap();
        let _ = check_theorem3(&f, &BigInt::from(m), &delta, &policy).unwrap();
        let _ = check_theorem4(&f, &BigInt::from(m), &delta, &policy).unwrap();
        let el = t.elapsed();
        if el.as_millis() > 100 {
            println!("slow m={m}: {el:?}");
            slow += 1;
        }
    }
    println!("total 401..=500: {:?}, slow count {slow}", t_all.elapsed());
}
