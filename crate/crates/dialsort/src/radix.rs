//! LSD radix extension covering the full signed 32-bit key range.
//!
//! Keys are mapped through an order-preserving bias onto `[0, 2^32)`, pushed
//! through four stable byte passes (base 256, shifts 0/8/16/24), and mapped
//! back. Each pass tallies one byte into a 256-cell histogram, converts it to
//! exclusive prefix positions, and scatters — the per-digit prefix sum is
//! inherent to LSD radix and is confined to this module. No key is ever
//! order-compared with another.

use crate::error::{Error, Result};

/// Buckets per pass.
pub const RADIX: usize = 256;
/// Number of byte passes covering 32 bits.
pub const PASS_COUNT: usize = 4;
/// Bit offset of the byte examined by each pass, least significant first.
pub const DIGIT_SHIFTS: [u32; PASS_COUNT] = [0, 8, 16, 24];

// 256^4 digit combinations must cover the whole 32-bit key space.
const _: () = assert!((RADIX as u64).pow(PASS_COUNT as u32) == 1 << 32);

/// Order-preserving bijection from signed keys onto `[0, 2^32)`: flips the
/// sign bit, so `x < y` (signed) iff `map(x) < map(y)` (unsigned).
#[inline]
pub fn to_ordered_unsigned(x: i32) -> u32 {
    (x as u32) ^ 0x8000_0000
}

/// Inverse of [`to_ordered_unsigned`].
#[inline]
pub fn from_ordered_unsigned(u: u32) -> i32 {
    (u ^ 0x8000_0000) as i32
}

/// Stable scatter of `data` into `scratch`, ordered by the byte
/// `(value >> shift) & 255`. Ties keep their input order.
pub fn lsd_pass(data: &[u32], scratch: &mut [u32], shift: u32) -> Result<()> {
    if data.len() != scratch.len() {
        return Err(Error::BufferSizeMismatch {
            expected: data.len(),
            actual: scratch.len(),
        });
    }
    let mut counts = [0usize; RADIX];
    for &value in data {
        counts[((value >> shift) & 0xFF) as usize] += 1;
    }
    // exclusive prefix sum: counts[d] becomes the first output slot of d
    let mut running = 0;
    for cell in counts.iter_mut() {
        let c = *cell;
        *cell = running;
        running += c;
    }
    for &value in data {
        let digit = ((value >> shift) & 0xFF) as usize;
        scratch[counts[digit]] = value;
        counts[digit] += 1;
    }
    Ok(())
}

fn alloc_keys(n: usize) -> Result<Vec<u32>> {
    let mut buf = Vec::new();
    buf.try_reserve_exact(n)
        .map_err(|_| Error::AllocationFailed { cells: n as u64 })?;
    Ok(buf)
}

/// Sorts signed 32-bit keys nondecreasing: bias map, four LSD byte passes
/// ping-ponging between two buffers, inverse bias map.
pub fn radix_sort(keys: &mut [i32]) -> Result<()> {
    let n = keys.len();
    let mut work = alloc_keys(n)?;
    work.extend(keys.iter().map(|&k| to_ordered_unsigned(k)));
    let mut scratch = alloc_keys(n)?;
    scratch.resize(n, 0);

    lsd_pass(&work, &mut scratch, DIGIT_SHIFTS[0])?;
    lsd_pass(&scratch, &mut work, DIGIT_SHIFTS[1])?;
    lsd_pass(&work, &mut scratch, DIGIT_SHIFTS[2])?;
    lsd_pass(&scratch, &mut work, DIGIT_SHIFTS[3])?;

    for (dst, &src) in keys.iter_mut().zip(&work) {
        *dst = from_ordered_unsigned(src);
    }
    Ok(())
}
