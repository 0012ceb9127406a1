"""Grid sweeps over (alpha, n) or (alpha, xi) and their CSV / JSON serialization."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, fields
from typing import Iterable

import numpy as np

from . import entanglement as ent
from .kinematics import BoostRapidity, WavePacket, polarization_leading_order

FIELDS = (
    "alpha",
    "n",
    "xi",
    "lambda1",
    "lambda2",
    "lambda3",
    "lambda4",
    "R",
    "log_negativity",
    "concurrence_wootters",
    "concurrence_reduced",
    "concurrence_pure_initial",
)

BOUNDARY_TOL = 1e-10


class InvariantViolation(RuntimeError):
    pass


@dataclass
class SweepConfig:
    alpha_min: float = 0.01
    alpha_max: float = 0.99
    alpha_steps: int = 99
    n_min: float = 0.0
    n_max: float = 1.0
    # number of points on the second axis in both modes
    n_steps: int = 101
    mode: str = "direct-n"
    w_over_m: float | None = None
    xi_min: float | None = None
    xi_max: float | None = None
    output_path: str | None = None
    format: str = "csv"

    def validate(self) -> None:
        if not 0 < self.alpha_min < self.alpha_max < 1:
            raise ValueError("need 0 < alpha-min < alpha-max < 1")
        if self.alpha_steps < 2 or self.n_steps < 2:
            raise ValueError("alpha-steps and n-steps must be >= 2")
        if self.format not in ("csv", "json"):
            raise ValueError(f"unknown format {self.format!r}")
        kinematic = (self.w_over_m, self.xi_min, self.xi_max)
        if self.mode == "direct-n":
            if not 0 <= self.n_min < self.n_max <= 1:
                raise ValueError("need 0 <= n-min < n-max <= 1")
            if any(v is not None for v in kinematic):
                raise ValueError("--w-over-m/--xi-min/--xi-max only apply to kinematic mode")
        elif self.mode == "kinematic":
            if any(v is None for v in kinematic):
                raise ValueError("kinematic mode needs --w-over-m, --xi-min and --xi-max")
            if not 0 < self.w_over_m < 1:
                raise ValueError("need 0 < w-over-m < 1")
            if not 0 <= self.xi_min < self.xi_max:
                raise ValueError("need 0 <= xi-min < xi-max")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass
class SweepRecord:
    alpha: float
    n: float
    xi: float | None
    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float
    R: float
    log_negativity: float
    concurrence_wootters: float
    concurrence_reduced: float
    concurrence_pure_initial: float


def measure_points(alphas, ns, xis=None) -> list[SweepRecord]:
    """Evaluate every measure at the paired points ``(alphas[i], ns[i])``.

    Closed forms are evaluated point by point; the Wootters concurrence runs
    as one batch over the assembled density matrices.
    """
    alphas = [float(a) for a in alphas]
    ns = [float(n) for n in ns]
    xis = [None] * len(alphas) if xis is None else [float(x) for x in xis]
    taus = np.array([ent.assemble_tau(a, n).matrix for a, n in zip(alphas, ns)])
    cw = np.atleast_1d(ent.concurrence_wootters(taus)) if len(taus) else []
    records = []
    for a, n, xi, c in zip(alphas, ns, xis, cw):
        p = ent.StateParameter(a)
        lam = ent.pt_eigenvalues_closed(p, n)
        records.append(
            SweepRecord(
                alpha=a,
                n=n,
                xi=xi,
                lambda1=lam.lambda1,
                lambda2=lam.lambda2,
                lambda3=lam.lambda3,
                lambda4=lam.lambda4,
                R=ent.ppt_threshold(n),
                log_negativity=ent.log_negativity_closed(p, n),
                concurrence_wootters=float(c),
                concurrence_reduced=ent.concurrence_reduced(p, n).value,
                concurrence_pure_initial=ent.concurrence_pure(ent.initial_state(p)),
            )
        )
    return records


def measure(alpha: float, n: float) -> SweepRecord:
    return measure_points([alpha], [n])[0]


def check_record(rec: SweepRecord) -> None:
    """Raise InvariantViolation unless the record has a consistent PT spectrum."""
    lam = (rec.lambda1, rec.lambda2, rec.lambda3, rec.lambda4)
    if abs(sum(lam) - 1) > 1e-12:
        raise InvariantViolation(f"PT spectrum does not sum to 1 at alpha={rec.alpha}, n={rec.n}")
    if min(rec.lambda1, rec.lambda3, rec.lambda4) < -1e-12:
        raise InvariantViolation(f"unexpected negative PT eigenvalue at alpha={rec.alpha}, n={rec.n}")
    ab = rec.alpha * math.sqrt(1 - rec.alpha**2)
    if abs(ab - rec.R) > BOUNDARY_TOL and (rec.lambda2 < 0) != (ab > rec.R):
        raise InvariantViolation(f"sign of lambda2 disagrees with threshold at alpha={rec.alpha}, n={rec.n}")


def grid_axes(config: SweepConfig) -> tuple[np.ndarray, np.ndarray]:
    alphas = np.linspace(config.alpha_min, config.alpha_max, config.alpha_steps)
    if config.mode == "kinematic":
        second = np.linspace(config.xi_min, config.xi_max, config.n_steps)
    else:
        second = np.linspace(config.n_min, config.n_max, config.n_steps)
    return alphas, second


def run_sweep(config: SweepConfig) -> list[SweepRecord]:
    """Row-major records: alpha is the outer loop, n (or xi) the inner one."""
    config.validate()
    alphas, second = grid_axes(config)
    aa, ss = (g.ravel() for g in np.meshgrid(alphas, second, indexing="ij"))
    if config.mode == "kinematic":
        wp = WavePacket(w=config.w_over_m, m=1.0)
        n_of_xi = {x: polarization_leading_order(wp, BoostRapidity.from_xi(x)) for x in second}
        records = measure_points(aa, [n_of_xi[x] for x in ss], xis=ss)
    else:
        records = measure_points(aa, ss)
    for rec in records:
        check_record(rec)
    return records


def _fmt(value: float | None) -> str:
    return "" if value is None else format(value, ".17g")


def to_csv(records: Iterable[SweepRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for rec in records:
        writer.writerow([_fmt(getattr(rec, f)) for f in FIELDS])
    return buf.getvalue()


def to_json(records: Iterable[SweepRecord]) -> str:
    return json.dumps([asdict(r) for r in records], indent=1) + "\n"


def render(records: list[SweepRecord], fmt: str) -> str:
    return to_csv(records) if fmt == "csv" else to_json(records)


def read_csv(text: str) -> list[SweepRecord]:
    rows = csv.DictReader(io.StringIO(text))
    names = [f.name for f in fields(SweepRecord)]
    return [SweepRecord(**{k: (float(row[k]) if row[k] != "" else None) for k in names}) for row in rows]
