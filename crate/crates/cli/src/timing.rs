use std::time::{Duration, Instant};

/// Samples taken per measurement; the reported time is the fastest.
pub const SAMPLES: usize = 5;
const MIN_SAMPLE: Duration = Duration::from_millis(20);

/// Best-of-[`SAMPLES`] wall time of one call to `pass`, in nanoseconds.
/// Fast passes are repeated inside each sample until it lasts long enough
/// to time reliably.
pub fn best_of<F: FnMut()>(mut pass: F) -> u64 {
    let mut reps = 1u32;
    loop {
        let t = Instant::now();
        for _ in 0..reps {
            pass();
        }
        if t.elapsed() >= MIN_SAMPLE || reps >= 1 << 20 {
            break;
        }
        reps *= 2;
    }
    let mut best = u128::MAX;
    for _ in 0..SAMPLES {
        let t = Instant::now();
        for _ in 0..reps {
            pass();
        }
        best = best.min(t.elapsed().as_nanos() / u128::from(reps));
    }
    best.max(1) as u64
}
