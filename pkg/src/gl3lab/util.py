"""Small numerical helpers shared by the quadrature-heavy modules."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

TWO_PI = 2.0 * np.pi


def e(z):
    """The additive character e(z) = exp(2*pi*i*z)."""
    return np.exp(2j * np.pi * np.asarray(z))


def e_stable(phase):
    """e(phase) with the argument reduced mod 1 before the exponential.

    ``phase`` may carry extended precision (np.longdouble); the fractional
    part is what matters, so reducing first keeps large phases accurate.
    """
    frac = np.mod(phase, 1.0)
    return np.exp(2j * np.pi * np.asarray(frac, dtype=np.float64))


@lru_cache(maxsize=64)
def gauss_legendre_01(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights mapped to [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(order)
    return 0.5 * (x + 1.0), 0.5 * w


def panel_nodes(edges: np.ndarray, order: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Tensor of GL nodes per panel: (nodes, weights01, widths).

    ``nodes`` has shape (npanels, order); combine panel sums with
    ``widths[:, None] * weights01[None, :]``.
    """
    nodes01, w01 = gauss_legendre_01(order)
    widths = np.diff(edges)
    nodes = edges[:-1, None] + widths[:, None] * nodes01[None, :]
    return nodes, w01, widths


def phase_adapted_edges(rate_fn, a: float, b: float, cycles_per_panel: float,
                        samples: int = 513, min_panels: int = 8,
                        max_panels: int = 1 << 18) -> np.ndarray:
    """Panel edges on [a, b] spaced so each panel holds a bounded phase swing.

    ``rate_fn`` maps x to the local oscillation density |f'(x)| in cycles per
    unit length.  Edges are placed at equal increments of the cumulative
    cycle count, with a uniform floor so slowly varying amplitude is still
    resolved where the phase is flat.
    """
    xs = np.linspace(a, b, samples)
    rate = np.abs(np.asarray(rate_fn(xs), dtype=float))
    dx = xs[1] - xs[0]
    cum = np.concatenate([[0.0], np.cumsum(0.5 * (rate[1:] + rate[:-1]) * dx)])
    total_cycles = float(cum[-1])
    n_panels = int(np.ceil(total_cycles / cycles_per_panel)) + min_panels
    n_panels = min(n_panels, max_panels)
    # strictly increasing cumulative for interpolation
    cum = cum + np.linspace(0.0, 1e-12 * max(total_cycles, 1.0), samples)
    targets = np.linspace(cum[0], cum[-1], n_panels + 1)
    edges = np.interp(targets, cum, xs)
    edges = np.unique(np.concatenate([edges, np.linspace(a, b, min_panels + 1)]))
    edges[0], edges[-1] = a, b
    return edges
