#!/usr/bin/env python3
# Copyright 2026 The relsemi Authors
# SPDX-License-Identifier: Apache-2.0
"""Independent numpy/scipy computations of the reference values frozen in the C++ tests."""

import numpy as np
import scipy.linalg as sla


def interval_laplacian(m, a=0.0, b=1.0):
    h = (b - a) / (m + 1)
    return (np.diag(-2 * np.ones(m)) + np.diag(np.ones(m - 1), 1) + np.diag(np.ones(m - 1), -1)) / h**2, h


def grid_points(m, c=0.0, hw=1.0):
    h = 2 * hw / (m + 1)
    return c - hw + (np.arange(m) + 1) * h


def main():
    print("gap(e1, rot 0.3)", np.linalg.norm(np.outer([1, 0], [1, 0]) -
                                               np.outer([np.cos(.3), np.sin(.3)], [np.cos(.3), np.sin(.3)]), 2))
    print("neumann 1/2.1", 1 / 2.1)
    z = (1 + 1j) / np.sqrt(2)
    print("|exp(-z)|", abs(np.exp(-z)), "exp(-z)", np.exp(-z))
    for m in (9, 99):
        l, h = interval_laplacian(m)
        ev = np.linalg.eigvalsh(-l)
        print(f"interval m={m} kappa1", ev[0], "closed", 4 / h**2 * np.sin(np.pi * h / 2) ** 2)
    l, h = interval_laplacian(3)
    r = np.linalg.inv(np.eye(3) - l)
    print("m=3 (1-L)^-1 row sums", np.abs(r).sum(1))
    r2 = np.linalg.inv(np.eye(3) - 2 * l)
    print("m=3 (1-2L)^-1 row sums", np.abs(r2).sum(1))
    x = grid_points(32)
    xx, yy = np.meshgrid(x, x)
    print("disk r=0.7 m=32 count", int((xx**2 + yy**2 < 0.49).sum()))
    x = grid_points(64)
    xx, yy = np.meshgrid(x, x)
    print("disk r=0.7 m=64 count", int((xx**2 + yy**2 < 0.49).sum()))
    # Quadratic exactness: L u = 1 with u = x(x-1)/2 on (0,1).
    l, h = interval_laplacian(7)
    xs = (np.arange(7) + 1) * h
    print("quadratic residual", np.abs(l @ (xs * (xs - 1) / 2) - 1).max())
    # Sector bound for the interval Laplacian (m = 9) on |arg λ| = 3π/4 (1 - 1e-6).
    l, h = interval_laplacian(9)
    mu = np.linalg.eigvalsh(l)
    th = 0.75 * np.pi * (1 - 1e-6)
    r = np.logspace(-3, 6, 4001)
    lam = r * np.exp(1j * th)
    vals = np.max(np.abs(lam[:, None]) / np.abs(lam[:, None] - mu[None, :]), axis=1)
    print("interval sector max", vals.max(), "bound", 1 / np.sin(np.pi / 4))
    # graph(-1-1/n) holomorphic errors on K = {e^{iθ}/2, |θ| ≤ π/4}.
    th = np.linspace(-np.pi / 4, np.pi / 4, 9)
    zz = 0.5 * np.exp(1j * th)
    for n in (10, 100, 1000):
        print("holo err n", n, np.abs(np.exp(-(1 + 1 / n) * zz) - np.exp(-zz)).max())
    # Example with n: sup_t |e^{int}-1|/n
    for n in (10, 100):
        t = np.linspace(0, 10, 200001)
        print("ex sup", n, np.abs(np.exp(1j * n * t) - 1).max() / n, 2 / n)
    # Functional equation, graph(-1): S(t)S(s) = ∫_t^{t+s} T - ∫_0^s T.
    print("fe", (1 - np.exp(-1)) ** 2, (np.exp(-1) - np.exp(-2)) - (1 - np.exp(-1)))
    # 2x2 blocks and the canonical relation {((a,0),(-a,b))}.
    print("herm nilpotent", np.linalg.eigvalsh(np.array([[0, .5], [.5, 0]])).max())
    print("expm diag", sla.expm(np.diag([-1.0, 0.0])))


if __name__ == "__main__":
    main()
