"""Independent truncated-Fock reference values used to freeze golden numbers.

Runs with numpy only and shares no code with the C++ library.
"""
import math
import sys

import numpy as np


def tmsv(nbar, cutoff):
    lam2 = nbar / (nbar + 1.0)
    psi = np.zeros((cutoff, cutoff))
    for n in range(cutoff):
        psi[n, n] = math.sqrt(1.0 - lam2) * lam2 ** (n / 2.0)
    return psi  # psi[signal, reference]


def lossy_signal(psi, tau, cutoff):
    # rho[(s,r),(s',r')] after pure loss on the signal index
    rho_in = np.einsum("ab,cd->abcd", psi, psi.conj())
    out = np.zeros_like(rho_in)
    for k in range(cutoff):
        a = np.zeros((cutoff, cutoff))
        for m in range(cutoff - k):
            n = m + k
            a[m, n] = math.sqrt(math.comb(n, k) * tau ** m * (1 - tau) ** k)
        out += np.einsum("ms,srtu,nt->mrnu", a, rho_in, a.conj())
    return out.reshape(cutoff * cutoff, cutoff * cutoff)


def mpow(rho, p):
    w, v = np.linalg.eigh(rho)
    # round-off eigenvalues are zeros; fractional powers would inflate them
    w = np.where(w < 1e-14, 0.0, w)
    return (v * w ** p) @ v.conj().T


def s_overlap(r0, r1, s):
    return float(np.trace(mpow(r0, s) @ mpow(r1, 1 - s)).real)


def helstrom(r0, r1):
    w = np.linalg.eigvalsh(r0 - r1)
    return 0.5 * (1 - 0.5 * np.abs(w).sum())


def main():
    cutoff = int(sys.argv[1]) if len(sys.argv) > 1 else 40
    for nbar, tau in [(1.0, 0.25), (0.5, 0.5)]:
        psi = tmsv(nbar, cutoff)
        r0 = np.einsum("ab,cd->abcd", psi, psi).reshape(cutoff ** 2, cutoff ** 2)
        r1 = lossy_signal(psi, tau, cutoff)
        fid = float(psi.reshape(-1) @ r1 @ psi.reshape(-1))
        print(f"nbar={nbar} tau={tau} F={fid:.12f} closed={(1+nbar*(1-math.sqrt(tau)))**-2:.12f}")
        for s in (0.1, 0.3, 0.5, 0.7, 0.9):
            print(f"  C_{s} = {s_overlap(r0, r1, s):.12f}")
        print(f"  helstrom = {helstrom(r0, r1):.12f}")


if __name__ == "__main__":
    main()
