//! Smallest interesting instance: the corners of a rectangle are never
//! interpolable for all data by two axis-aligned ridge functions, and the
//! rectangle itself is the certificate.

use ridgepath::geometry::Direction;
use ridgepath::interp::{interpolable_for_all_data, obstruction_for_data, obstruction_pairing};
use ridgepath::rational::int;

fn main() -> Result<(), ridgepath::Error> {
    // The four corners of a rectangle, seen through the coordinate axes.
    let points = vec![
        vec![int(0), int(0)],
        vec![int(0), int(1)],
        vec![int(1), int(1)],
        vec![int(1), int(0)],
    ];
    let dirs = vec![
        Direction::new(vec![int(1), int(0)])?,
        Direction::new(vec![int(0), int(1)])?,
    ];

    let (interpolable, certificate) = interpolable_for_all_data(&points, &dirs)?;
    assert!(!interpolable);
    let cycle = certificate.expect("negative verdicts carry a certificate");
    assert!(cycle.verify(&dirs));

    // A unit spike at one corner cannot be a ridge sum, and the cycle proves it.
    let data = vec![int(1), int(0), int(0), int(0)];
    let obstruction = obstruction_for_data(&points, &dirs, &data)?.unwrap();
    let local: Vec<_> = obstruction
        .points
        .iter()
        .map(|p| data[points.iter().position(|q| q == p).unwrap()].clone())
        .collect();
    assert!(obstruction_pairing(&obstruction, &local) != int(0));

    println!("rectangle corners: not interpolable, certificate verified");
    Ok(())
}
