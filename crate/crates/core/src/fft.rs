//! Discrete Fourier transform kernels: an in-place radix-2 FFT for
//! power-of-two lengths and a phase-table direct sum for everything else.
//! Both directions are unnormalized; callers apply their own scaling.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

/// Forward spectrum F[m] = Σ_j values[j]·e^{−2πi jm/n}.
pub(crate) fn spectrum(values: &[Complex64]) -> Vec<Complex64> {
    transform(values, -1.0)
}

/// Inverse spectrum f[j] = Σ_m bins[m]·e^{+2πi jm/n}.
pub(crate) fn inverse_spectrum(bins: &[Complex64]) -> Vec<Complex64> {
    transform(bins, 1.0)
}

fn transform(values: &[Complex64], sign: f64) -> Vec<Complex64> {
    let n = values.len();
    if n.is_power_of_two() && n >= 2 {
        let mut buf = values.to_vec();
        fft_pow2(&mut buf, sign);
        buf
    } else {
        direct(values, sign)
    }
}

fn fft_pow2(buf: &mut [Complex64], sign: f64) {
    let n = buf.len();
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let ang = sign * 2.0 * PI / len as f64;
        let step = Complex64::new(libm::cos(ang), libm::sin(ang));
        for start in (0..n).step_by(len) {
            let mut w = Complex64::new(1.0, 0.0);
            for k in 0..len / 2 {
                // Refresh the twiddle periodically; pure recurrence drifts
                // by O(len·eps) on large transforms.
                if k & 0xFF == 0 && k > 0 {
                    let a = ang * k as f64;
                    w = Complex64::new(libm::cos(a), libm::sin(a));
                }
                let u = buf[start + k];
                let v = buf[start + k + len / 2] * w;
                buf[start + k] = u + v;
                buf[start + k + len / 2] = u - v;
                w *= step;
            }
        }
        len <<= 1;
    }
}

/// O(n²) fallback. The phase e^{±2πi jm/n} is read from a table indexed by
/// jm mod n, so each entry is computed from a single sincos with no
/// accumulated recurrence error.
fn direct(values: &[Complex64], sign: f64) -> Vec<Complex64> {
    let n = values.len();
    let mut table = Vec::with_capacity(n);
    for r in 0..n {
        let a = sign * 2.0 * PI * r as f64 / n as f64;
        table.push(Complex64::new(libm::cos(a), libm::sin(a)));
    }
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (m, slot) in out.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, v) in values.iter().enumerate() {
            acc += v * table[(j * m) % n];
        }
        *slot = acc;
    }
    out
}
