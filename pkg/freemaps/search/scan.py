"""Floating-point determinant scans.

Only the search uses these values, to rank candidates; verdicts always
come from the exact pipeline.

"""
import math
import torch
from ..ansatz import family as f
from ..exact import trig as tr


def grid(n: int) -> torch.Tensor:
    """Return n equispaced angles 2πi/n."""
    if n < 2:
        raise ValueError(f"A grid needs at least 2 points, not {n}.")
    return torch.arange(n, dtype=torch.float64) * (2 * math.pi / n)


def evaluate(poly: tr.TrigPoly, z: torch.Tensor) -> torch.Tensor:
    """Evaluate a trigonometric polynomial at float angles."""
    value = torch.full_like(z, float(poly.constant))
    for k, c in poly.cos_coeffs:
        value = value + float(c) * torch.cos(k * z)
    for k, c in poly.sin_coeffs:
        value = value + float(c) * torch.sin(k * z)
    return value


def family_tensor(family: f.DerivativeFamily, z: torch.Tensor):
    """Stack the family at every angle into shape (len(z), d, d)."""
    cache: dict[tr.TrigPoly, torch.Tensor] = {}
    rows = []
    for row in family.rows():
        entries = []
        for entry in row:
            if entry not in cache:
                cache[entry] = evaluate(entry, z)
            entries.append(cache[entry])
        rows.append(torch.stack(entries, dim=-1))
    return torch.stack(rows, dim=-2)


def determinant_samples(spec: f.AnsatzSpec, n: int) -> torch.Tensor:
    """D(2πi/n) for i = 0..n-1 through float matrix determinants."""
    z = grid(n)
    return torch.linalg.det(family_tensor(f.derivative_family(spec), z))


def scan_determinant(spec: f.AnsatzSpec, n: int) -> float:
    """Return min |D| over n equispaced angles."""
    return determinant_samples(spec, n).abs().min().item()


def sign_margin(values: torch.Tensor) -> float:
    """Return min s·D for the majority sign s of the samples."""
    s = 1.0 if torch.sign(values).sum().item() >= 0 else -1.0
    return (s * values).min().item()
