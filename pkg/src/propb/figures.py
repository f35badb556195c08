"""Figure rendering for the report path: certificates, spectra, suite results.

All functions write a PNG (or whatever the path suffix selects) next to the
JSON output; rendering is headless.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .bounds import Certificate
from .spectra import SpectralSummary
from .suites import SuiteReport

__all__ = ["save_certificate_figure", "save_spectrum_figure", "save_suite_figure"]

_FULL_SPECTRUM_CUTOFF = 600


def save_certificate_figure(certificate: Certificate, path: str | Path) -> None:
    """Bar chart of average degree against the exclusion bound."""
    q = certificate.quantities
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    verdict_color = "#c0392b" if certificate.excluded else "#2980b9"
    bars = ax.bar(
        ["average degree", "bound"],
        [q["avg_degree"], q["bound"]],
        color=[verdict_color, "#7f8c8d"],
        width=0.5,
    )
    for bar in bars:
        ax.annotate(
            f"{bar.get_height():.4g}",
            (bar.get_x() + bar.get_width() / 2, bar.get_height()),
            ha="center",
            va="bottom",
            fontsize=9,
        )
    pieces = [f"lambda_min = {q['lambda_min']:.6g}"]
    if "lambda2_min" in q:
        pieces.append(f"lambda2_min = {q['lambda2_min']:.6g}")
    pieces.append(f"margin = {q['margin']:.6g}")
    ax.set_title(f"{certificate.theorem}: {certificate.verdict}" + (" (TIGHT)" if certificate.tight else ""))
    ax.set_ylabel("value")
    ax.text(
        0.98,
        0.98,
        "\n".join(pieces),
        transform=ax.transAxes,
        ha="right",
        va="top",
        fontsize=9,
        bbox={"boxstyle": "round", "facecolor": "white", "alpha": 0.8},
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_spectrum_figure(
    matrix: np.ndarray, summary: SpectralSummary, path: str | Path
) -> None:
    """Sorted eigenvalue profile with the extremes highlighted.

    Falls back to extremes-only markers when the matrix is too large to
    diagonalize fully.
    """
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    if summary.n <= _FULL_SPECTRUM_CUTOFF:
        values = np.linalg.eigvalsh(np.asarray(matrix, dtype=np.float64))
        ax.plot(np.arange(values.size), values, ".", markersize=4, color="#34495e")
    ax.axhline(summary.lambda_min, color="#c0392b", linestyle="--", linewidth=1)
    ax.axhline(summary.lambda_max, color="#27ae60", linestyle="--", linewidth=1)
    ax.annotate(f"min {summary.lambda_min:.6g}", (0, summary.lambda_min), fontsize=9, va="top")
    ax.annotate(f"max {summary.lambda_max:.6g}", (0, summary.lambda_max), fontsize=9, va="bottom")
    ax.set_xlabel("eigenvalue index")
    ax.set_ylabel("eigenvalue")
    ax.set_title(f"spectrum, n = {summary.n}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_suite_figure(report: SuiteReport, path: str | Path) -> None:
    """Horizontal pass/fail bars, one per property check."""
    names = [check.name for check in report.checks]
    cases = [check.cases for check in report.checks]
    colors = ["#27ae60" if check.passed else "#c0392b" for check in report.checks]
    fig, ax = plt.subplots(figsize=(6.5, 1.2 + 0.6 * len(names)))
    positions = np.arange(len(names))
    ax.barh(positions, cases, color=colors, height=0.55)
    for pos, check in zip(positions, report.checks):
        label = "pass" if check.passed else f"{len(check.failures)} failures"
        ax.annotate(f"{check.cases} cases, {label}", (check.cases, pos), va="center", fontsize=9)
    ax.set_yticks(positions, names)
    ax.set_xlabel("cases")
    ax.set_xlim(0, max(cases + [1]) * 1.35)
    ax.set_title(f"suite '{report.suite}' (seed {report.seed}): " + ("PASS" if report.passed else "FAIL"))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
