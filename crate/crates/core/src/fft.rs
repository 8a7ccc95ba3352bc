//! Complex FFT of arbitrary length.
//!
//! Powers of two use an iterative radix-2 transform; other lengths go
//! through Bluestein's chirp-z algorithm on a padded power-of-two buffer.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `X_k = sum_n x_n exp(-2 pi i k n / N)`.
    Forward,
    /// Same with `+i`, unnormalized.
    Inverse,
}

/// Transforms `data` in place. The inverse is not scaled by `1/N`.
pub fn fft(data: &mut [Complex64], direction: Direction) {
    let n = data.len();
    if n <= 1 {
        return;
    }
    if n.is_power_of_two() {
        radix2(data, direction);
    } else {
        bluestein(data, direction);
    }
}

fn twiddle(k: usize, n: usize, direction: Direction) -> Complex64 {
    let sign = match direction {
        Direction::Forward => -1.0,
        Direction::Inverse => 1.0,
    };
    let angle = sign * 2.0 * PI * (k as f64) / (n as f64);
    Complex64::new(angle.cos(), angle.sin())
}

fn radix2(data: &mut [Complex64], direction: Direction) {
    let n = data.len();
    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if j > i {
            data.swap(i, j);
        }
    }
    // Twiddles for the largest stage; smaller stages take strided entries.
    let table: Vec<Complex64> = (0..n / 2).map(|k| twiddle(k, n, direction)).collect();
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let stride = n / len;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let w = table[k * stride];
                let a = data[start + k];
                let b = data[start + k + half] * w;
                data[start + k] = a + b;
                data[start + k + half] = a - b;
            }
        }
        len <<= 1;
    }
}

fn bluestein(data: &mut [Complex64], direction: Direction) {
    let n = data.len();
    let m = (2 * n - 1).next_power_of_two();
    let sign = match direction {
        Direction::Forward => -1.0,
        Direction::Inverse => 1.0,
    };
    // chirp_k = exp(sign * i pi k^2 / n), with k^2 reduced mod 2n to keep the angle small.
    let two_n = 2 * n as u128;
    let chirp: Vec<Complex64> = (0..n)
        .map(|k| {
            let k2 = ((k as u128) * (k as u128) % two_n) as f64;
            let angle = sign * PI * k2 / n as f64;
            Complex64::new(angle.cos(), angle.sin())
        })
        .collect();
    let mut a = vec![Complex64::new(0.0, 0.0); m];
    for k in 0..n {
        a[k] = data[k] * chirp[k];
    }
    let mut b = vec![Complex64::new(0.0, 0.0); m];
    b[0] = chirp[0].conj();
    for k in 1..n {
        b[k] = chirp[k].conj();
        b[m - k] = chirp[k].conj();
    }
    radix2(&mut a, Direction::Forward);
    radix2(&mut b, Direction::Forward);
    for (x, y) in a.iter_mut().zip(b.iter()) {
        *x *= *y;
    }
    radix2(&mut a, Direction::Inverse);
    let scale = 1.0 / m as f64;
    for k in 0..n {
        data[k] = a[k] * chirp[k] * scale;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_dft(x: &[Complex64]) -> Vec<Complex64> {
        let n = x.len();
        (0..n)
            .map(|k| {
                x.iter()
                    .enumerate()
                    .map(|(j, v)| v * twiddle((j * k) % n, n, Direction::Forward))
                    .sum()
            })
            .collect()
    }

    fn sample(n: usize) -> Vec<Complex64> {
        (0..n)
            .map(|j| {
                let t = j as f64;
                Complex64::new((0.37 * t).sin() + 0.1 * t, (1.3 * t).cos())
            })
            .collect()
    }

    #[test]
    fn matches_naive_dft_for_mixed_lengths() {
        for n in [1usize, 2, 3, 5, 8, 12, 17, 64, 100, 127] {
            let x = sample(n);
            let expected = naive_dft(&x);
            let mut got = x.clone();
            fft(&mut got, Direction::Forward);
            let scale: f64 = x.iter().map(|v| v.norm()).sum::<f64>().max(1.0);
            for (g, e) in got.iter().zip(expected.iter()) {
                assert!((g - e).norm() < 1e-12 * scale, "n = {n}");
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        for n in [16usize, 30, 1000] {
            let x = sample(n);
            let mut y = x.clone();
            fft(&mut y, Direction::Forward);
            fft(&mut y, Direction::Inverse);
            for (a, b) in x.iter().zip(y.iter()) {
                assert!((a - b / n as f64).norm() < 1e-11);
            }
        }
    }
}
