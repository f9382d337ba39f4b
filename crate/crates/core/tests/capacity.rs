// Runs in its own process so it can freeze a capacity of 1.

use spardiff::{ADConfig, AdError, SparseDual};

#[test]
fn capacity_one_overflows_on_union() {
    ADConfig::new(1).unwrap().install().unwrap();
    assert_eq!(ADConfig::current().capacity(), 1);

    let a = SparseDual::independent(1, 0.0).unwrap();
    let b = SparseDual::independent(2, 0.0).unwrap();
    assert_eq!(
        a.try_add(&b).unwrap_err(),
        AdError::CapacityOverflow {
            required: 2,
            capacity: 1
        }
    );
    // shared identifier stays within capacity
    assert_eq!(a.try_mul(&a).unwrap().nnz(), 1);
    assert_eq!(
        spardiff::array::sum(&[a.clone(), b]).unwrap_err(),
        AdError::CapacityOverflow {
            required: 2,
            capacity: 1
        }
    );
    assert!(SparseDual::from_entries(0.0, [(1, 1.0), (2, 1.0)]).is_err());

    assert_eq!(
        ADConfig::new(3).unwrap().install(),
        Err(AdError::ConfigFrozen {
            current: 1,
            requested: 3
        })
    );
}
