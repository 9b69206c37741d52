"""Exhaustive and sampled verification sweeps over small prime fields.

The sweeps enumerate subsets of the additive group Z_p or of the
multiplicative group GF(p)* (mapped to exponents of the smallest primitive
root, which turns products into index sums), filter by each bound's
hypothesis, and check the claimed inequality.  Subsets live in integer
bitmasks; the exhaustive pair sweeps run as vectorized gather/or passes over
precomputed cyclic-shift tables, which is what keeps the p = 11 all-pairs
sweeps in the seconds range.

Instance accounting, used consistently by reports:

* ``examined``              -- enumerated (or sampled) input pairs/sets that
                               pass the size filter.
* ``hypothesis_satisfying`` -- qualifying (A, B, c) triples for the
                               unique-representation bounds, (A, B) pairs for
                               the cover bound, (A, c) pairs for the
                               single-set bounds.
* ``bound_holding``         -- the same units, restricted to instances where
                               the inequality holds.
* ``tight`` / ``counterexamples`` -- recorded per input pair/set, each entry
                               carrying every qualifying c.

Sampling uses splitmix64 (64-bit state; the state advances by the golden
constant once per draw), recorded in the report for cross-implementation
reproducibility.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field as dataclass_field
import json
import time

import numpy as np

from .certify import (
    TheoremContradictionError,
    symmetric_pair_certificate,
)
from .field import FieldElement, PrimeField, find_prime_with_subgroup, primitive_root_of_unity, smallest_generator
from .sets import ElementSet, GroupMode, representations, restricted_combine

DEFAULT_BUDGET = 1 << 26
DEFAULT_TIGHT_CAP = 2048
COUNTEREXAMPLE_LIST_CAP = 1000
PRNG_ALGORITHM = "splitmix64"

PAIR_THEOREMS = ("ks", "additive", "mult", "cover")
SINGLE_SET_THEOREMS = ("main", "corollary-add", "corollary-mult")
ALL_THEOREMS = PAIR_THEOREMS + SINGLE_SET_THEOREMS

_THEOREM_MODE = {
    "ks": None,  # chosen by config
    "additive": GroupMode.ADDITIVE,
    "mult": GroupMode.MULTIPLICATIVE,
    "cover": GroupMode.MULTIPLICATIVE,
    "main": GroupMode.MULTIPLICATIVE,
    "corollary-add": GroupMode.ADDITIVE,
    "corollary-mult": GroupMode.MULTIPLICATIVE,
}

# size-offset k in |combine| >= |A| + |B| - k for the unique-representation bounds
_PAIR_OFFSET = {"ks": 1, "additive": 2, "mult": 3}


class SplitMix64:
    """splitmix64 PRNG: 64-bit state, one golden-ratio increment per draw."""

    _MASK = (1 << 64) - 1
    _GOLDEN = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def next_word(self) -> int:
        self.state = (self.state + self._GOLDEN) & self._MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next_word() % n


@dataclass(frozen=True)
class SweepConfig:
    """What to sweep: theorem tag, primes, enumeration limits, sampling."""

    theorem: str
    primes: tuple[int, ...]
    group_mode: GroupMode | None = None
    max_set_size: int | None = None
    samples: int | None = None
    seed: int | None = None
    partitions: int = 1
    budget: int = DEFAULT_BUDGET
    tight_cap: int = DEFAULT_TIGHT_CAP
    attach_certificates: bool = False

    def resolved_mode(self) -> GroupMode:
        fixed = _THEOREM_MODE[self.theorem]
        if fixed is not None:
            if self.group_mode is not None and self.group_mode is not fixed:
                raise ValueError(
                    f"theorem {self.theorem!r} is {fixed.value}; got {self.group_mode.value}"
                )
            return fixed
        if self.group_mode is None:
            raise ValueError("theorem 'ks' needs an explicit group mode")
        return self.group_mode

    def validate(self) -> None:
        if self.theorem not in ALL_THEOREMS:
            raise ValueError(f"unknown theorem tag {self.theorem!r}")
        if not self.primes:
            raise ValueError("at least one prime is required")
        self.resolved_mode()
        if self.samples is not None:
            if self.samples < 0:
                raise ValueError("sample count must be >= 0")
            if self.seed is None:
                raise ValueError("sampled sweeps need a seed")
            if self.partitions != 1:
                raise ValueError("sampled sweeps run single-partition")
        if self.partitions < 1:
            raise ValueError("partitions must be >= 1")
        if self.max_set_size is not None and self.max_set_size < 1:
            raise ValueError("max set size must be >= 1")
        if self.budget < 1:
            raise ValueError("budget must be positive")
        if self.tight_cap < 0:
            raise ValueError("tight list cap must be >= 0")

    def echo(self) -> dict:
        return {
            "theorem": self.theorem,
            "primes": list(self.primes),
            "group_mode": self.resolved_mode().value,
            "max_set_size": self.max_set_size,
            "sweep": "exhaustive" if self.samples is None else "sample",
            "samples": self.samples,
            "seed": self.seed,
            "partitions": self.partitions,
            "budget": self.budget,
            "tight_cap": self.tight_cap,
            "attach_certificates": self.attach_certificates,
        }


@dataclass
class PrimeStats:
    p: int
    examined: int = 0
    hypothesis_satisfying: int = 0
    bound_holding: int = 0
    tight_count: int = 0
    counterexample_count: int = 0
    contradictions: int = 0
    tight: list = dataclass_field(default_factory=list)
    counterexamples: list = dataclass_field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "examined": self.examined,
            "hypothesis_satisfying": self.hypothesis_satisfying,
            "bound_holding": self.bound_holding,
            "tight_count": self.tight_count,
            "counterexample_count": self.counterexample_count,
            "contradictions": self.contradictions,
            "tight": self.tight,
            "counterexamples": self.counterexamples,
        }


@dataclass
class Report:
    """Outcome of a sweep.  Wall time stays out of serialized output so that
    reruns with identical configuration produce byte-identical files."""

    config: dict
    prng: dict | None
    per_prime: list[PrimeStats]
    wall_time_s: float = 0.0

    @property
    def counterexample_total(self) -> int:
        return sum(s.counterexample_count for s in self.per_prime)

    @property
    def contradiction_total(self) -> int:
        return sum(s.contradictions for s in self.per_prime)

    def ok(self) -> bool:
        return self.counterexample_total == 0 and self.contradiction_total == 0

    def stats_for(self, p: int) -> PrimeStats:
        for s in self.per_prime:
            if s.p == p:
                return s
        raise KeyError(f"no stats for p = {p}")

    def to_json_dict(self) -> dict:
        return {
            "config": self.config,
            "prng": self.prng,
            "per_prime": [s.to_json_dict() for s in self.per_prime],
            "totals": {
                "examined": sum(s.examined for s in self.per_prime),
                "hypothesis_satisfying": sum(
                    s.hypothesis_satisfying for s in self.per_prime
                ),
                "bound_holding": sum(s.bound_holding for s in self.per_prime),
                "tight_count": sum(s.tight_count for s in self.per_prime),
                "counterexample_count": self.counterexample_total,
                "contradictions": self.contradiction_total,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        header = (
            "theorem,p,examined,hypothesis_satisfying,bound_holding,"
            "tight_count,counterexample_count,contradictions"
        )
        rows = [header]
        for s in self.per_prime:
            rows.append(
                f"{self.config['theorem']},{s.p},{s.examined},"
                f"{s.hypothesis_satisfying},{s.bound_holding},{s.tight_count},"
                f"{s.counterexample_count},{s.contradictions}"
            )
        return "\n".join(rows) + "\n"


# --------------------------------------------------------------------------
# group universes: subsets as bitmasks over group indices
# --------------------------------------------------------------------------


class _Universe:
    """Indexing of a cyclic group: bit k of a mask is the k-th group element.

    Additive mode indexes residues directly; multiplicative mode indexes
    exponents of the smallest primitive root, so the group operation is
    index addition mod m in both cases.
    """

    def __init__(self, field: PrimeField, mode: GroupMode):
        self.field = field
        self.mode = mode
        p = field.p
        if mode is GroupMode.ADDITIVE:
            self.m = p
            self.residues = tuple(range(p))
        else:
            self.m = p - 1
            g = int(smallest_generator(field))
            res = []
            v = 1
            for _ in range(p - 1):
                res.append(v)
                v = v * g % p
            self.residues = tuple(res)
        self.index_of = {r: k for k, r in enumerate(self.residues)}

    def mask_to_values(self, mask: int) -> list[int]:
        return sorted(
            self.residues[k] for k in range(self.m) if mask >> k & 1
        )

    def values_to_mask(self, values) -> int:
        mask = 0
        for v in values:
            mask |= 1 << self.index_of[int(v)]
        return mask

    def element_set(self, mask: int) -> ElementSet:
        return ElementSet(self.field, self.mode, self.mask_to_values(mask))


def _universe(p: int, mode: GroupMode) -> _Universe:
    return _Universe(PrimeField(p), mode)


def _cyclic_shift(mask: int, a: int, m: int) -> int:
    full = (1 << m) - 1
    return ((mask << a) | (mask >> (m - a))) & full if a else mask & full


def _mask_bits(mask: int) -> list[int]:
    bits = []
    k = 0
    while mask:
        if mask & 1:
            bits.append(k)
        mask >>= 1
        k += 1
    return bits


# --------------------------------------------------------------------------
# per-instance reference checks (pure Python; shared by sampling, entry
# materialization, and the tests' slow cross-validation)
# --------------------------------------------------------------------------


def _pair_instance(universe: _Universe, theorem: str, amask: int, bmask: int) -> dict:
    """Hypothesis and bound data for one (A, B) pair, from first principles."""
    m = universe.m
    a_bits = _mask_bits(amask)
    size_a = len(a_bits)
    size_b = bin(bmask).count("1")
    restricted = theorem != "ks"
    once = twice = 0
    for a in a_bits:
        shifted = _cyclic_shift(bmask & ~(1 << a) if restricted else bmask, a, m)
        twice |= once & shifted
        once |= shifted
    size_s = bin(once).count("1")
    out = {
        "amask": amask,
        "bmask": bmask,
        "size_a": size_a,
        "size_b": size_b,
        "size": size_s,
    }
    if theorem == "cover":
        n_indices = [
            a
            for a in a_bits
            if bmask >> a & 1 and not once >> (2 * a % m) & 1
        ]
        n_len = len(n_indices)
        bound = size_a + size_b - 2 - n_len // 2
        out.update(
            hyp_units=1 if n_len else 0,
            bound=bound,
            bound_ok=size_s >= bound,
            c_indices=[],
            n_indices=n_indices,
        )
    else:
        unique = once & ~twice
        c_indices = _mask_bits(unique)
        bound = size_a + size_b - _PAIR_OFFSET[theorem]
        out.update(
            hyp_units=len(c_indices),
            bound=bound,
            bound_ok=size_s >= bound,
            c_indices=c_indices,
            n_indices=[],
        )
    return out


def _single_instance(universe: _Universe, theorem: str, amask: int) -> dict:
    """Qualifying targets and bound data for one set A."""
    m = universe.m
    a_bits = _mask_bits(amask)
    n = len(a_bits)
    c1 = c2 = c3 = 0
    for a in a_bits:
        shifted = _cyclic_shift(amask & ~(1 << a), a, m)
        c3 |= c2 & shifted
        c2 |= c1 & shifted
        c1 |= shifted
    size_s = bin(c1).count("1")
    exactly_two = _mask_bits(c2 & ~c3)
    qualifying: list[tuple[int, int, int]] = []  # (c_index, a_index, b_index)
    for c in exactly_two:
        pair = None
        for a in a_bits:
            b = (c - a) % m
            if b != a and amask >> b & 1:
                pair = (a, b) if a < b else (b, a)
                break
        if pair is None:
            raise AssertionError("two-representation mask without a pair")
        if theorem == "main" and (n - 2) * (pair[0] - pair[1]) % m == 0:
            continue  # equal (n-2)-th powers: outside this bound's hypothesis
        qualifying.append((c, pair[0], pair[1]))
    bound = 2 * n - 3 if theorem in ("main", "corollary-add") else 2 * n - 4
    return {
        "amask": amask,
        "size_a": n,
        "size": size_s,
        "bound": bound,
        "bound_ok": size_s >= bound,
        "hyp_units": len(qualifying),
        "qualifying": qualifying,
    }


def _pair_entry(universe: _Universe, theorem: str, info: dict) -> dict:
    entry = {
        "A": universe.mask_to_values(info["amask"]),
        "B": universe.mask_to_values(info["bmask"]),
        "size": info["size"],
        "bound": info["bound"],
    }
    if theorem == "cover":
        entry["N"] = sorted(universe.residues[k] for k in info["n_indices"])
    else:
        entry["c"] = sorted(universe.residues[k] for k in info["c_indices"])
    return entry


def _single_entry(universe: _Universe, info: dict) -> dict:
    return {
        "A": universe.mask_to_values(info["amask"]),
        "c": sorted(universe.residues[c] for c, _, _ in info["qualifying"]),
        "size": info["size"],
        "bound": info["bound"],
    }


# --------------------------------------------------------------------------
# vectorized exhaustive pair sweep
# --------------------------------------------------------------------------


def _tables(m: int) -> tuple[np.ndarray, np.ndarray]:
    """(cyclic-shift table, popcount table) for masks over m group indices."""
    size = 1 << m
    masks = np.arange(size, dtype=np.uint32)
    full = np.uint32(size - 1)
    shift = np.empty((m, size), dtype=np.uint32)
    shift[0] = masks
    for a in range(1, m):
        shift[a] = ((masks << np.uint32(a)) | (masks >> np.uint32(m - a))) & full
    pop = np.bitwise_count(masks).astype(np.int64)
    return shift, pop


def _pair_partition(
    p: int,
    mode_value: str,
    theorem: str,
    a_lo: int,
    a_hi: int,
    max_set_size: int | None,
    tight_cap: int,
) -> dict:
    """Sweep A-masks in [a_lo, a_hi) against every B; returns partial stats."""
    universe = _universe(p, GroupMode(mode_value))
    m = universe.m
    shift, pop = _tables(m)
    b_all = np.arange(1, 1 << m, dtype=np.uint32)
    if max_set_size is not None:
        b_all = b_all[pop[b_all] <= max_set_size]
    size_b = pop[b_all]
    restricted = theorem != "ks"
    stats = {
        "examined": 0,
        "hyp": 0,
        "holding": 0,
        "tight_count": 0,
        "ce_count": 0,
        "tight_pairs": [],
        "ce_pairs": [],
    }
    for amask in range(max(a_lo, 1), a_hi):
        a_bits = _mask_bits(amask)
        size_a = len(a_bits)
        if max_set_size is not None and size_a > max_set_size:
            continue
        once = np.zeros(len(b_all), dtype=np.uint32)
        twice = np.zeros(len(b_all), dtype=np.uint32)
        for a in a_bits:
            idx = b_all & np.uint32(~(1 << a) & 0xFFFFFFFF) if restricted else b_all
            shifted = shift[a][idx]
            twice |= once & shifted
            once |= shifted
        size_s = pop[once]
        stats["examined"] += len(b_all)
        if theorem == "cover":
            nsize = np.zeros(len(b_all), dtype=np.int64)
            for a in a_bits:
                in_b = ((b_all >> np.uint32(a)) & np.uint32(1)).astype(np.int64)
                sq = 2 * a % m
                not_in_s = 1 - ((once >> np.uint32(sq)) & np.uint32(1)).astype(np.int64)
                nsize += in_b & not_in_s
            hyp = nsize > 0
            bound = size_a + size_b - 2 - nsize // 2
            ok = size_s >= bound
            stats["hyp"] += int(hyp.sum())
            stats["holding"] += int((hyp & ok).sum())
            tight_vec = hyp & ok & (size_s == bound)
            ce_vec = hyp & ~ok
        else:
            unique_counts = pop[once & ~twice]
            bound = size_a + size_b - _PAIR_OFFSET[theorem]
            ok = size_s >= bound
            stats["hyp"] += int(unique_counts.sum())
            stats["holding"] += int(unique_counts[ok].sum())
            has_c = unique_counts > 0
            tight_vec = has_c & ok & (size_s == bound)
            ce_vec = has_c & ~ok
        stats["tight_count"] += int(tight_vec.sum())
        stats["ce_count"] += int(ce_vec.sum())
        if len(stats["tight_pairs"]) < tight_cap:
            for bmask in b_all[tight_vec]:
                if len(stats["tight_pairs"]) >= tight_cap:
                    break
                stats["tight_pairs"].append((amask, int(bmask)))
        if len(stats["ce_pairs"]) < COUNTEREXAMPLE_LIST_CAP:
            for bmask in b_all[ce_vec]:
                if len(stats["ce_pairs"]) >= COUNTEREXAMPLE_LIST_CAP:
                    break
                stats["ce_pairs"].append((amask, int(bmask)))
    return stats


def _single_partition(
    p: int,
    theorem: str,
    a_lo: int,
    a_hi: int,
    max_set_size: int | None,
    tight_cap: int,
) -> dict:
    """Single-set sweep over A-masks in [a_lo, a_hi)."""
    universe = _universe(p, _THEOREM_MODE[theorem])
    stats = {
        "examined": 0,
        "hyp": 0,
        "holding": 0,
        "tight_count": 0,
        "ce_count": 0,
        "tight_pairs": [],
        "ce_pairs": [],
        "contradictions": 0,
    }
    for amask in range(max(a_lo, 1), a_hi):
        if max_set_size is not None and bin(amask).count("1") > max_set_size:
            continue
        info = _single_instance(universe, theorem, amask)
        stats["examined"] += 1
        if not info["qualifying"]:
            continue
        stats["hyp"] += info["hyp_units"]
        if theorem == "main":
            a_set = universe.element_set(amask)
            for c_idx, _, _ in info["qualifying"]:
                c = universe.residues[c_idx]
                try:
                    symmetric_pair_certificate(a_set, c)
                except TheoremContradictionError:
                    stats["contradictions"] += 1
        if info["bound_ok"]:
            stats["holding"] += info["hyp_units"]
            if info["size"] == info["bound"]:
                stats["tight_count"] += 1
                if len(stats["tight_pairs"]) < tight_cap:
                    stats["tight_pairs"].append((amask, None))
        else:
            stats["ce_count"] += 1
            if len(stats["ce_pairs"]) < COUNTEREXAMPLE_LIST_CAP:
                stats["ce_pairs"].append((amask, None))
    return stats


def _partition_worker(args) -> dict:
    kind, payload = args
    if kind == "pair":
        return _pair_partition(*payload)
    return _single_partition(*payload)


def _merge_partials(partials: list[dict], tight_cap: int) -> dict:
    merged = {
        "examined": 0,
        "hyp": 0,
        "holding": 0,
        "tight_count": 0,
        "ce_count": 0,
        "tight_pairs": [],
        "ce_pairs": [],
        "contradictions": 0,
    }
    for part in partials:
        merged["examined"] += part["examined"]
        merged["hyp"] += part["hyp"]
        merged["holding"] += part["holding"]
        merged["tight_count"] += part["tight_count"]
        merged["ce_count"] += part["ce_count"]
        merged["contradictions"] += part.get("contradictions", 0)
        merged["tight_pairs"].extend(part["tight_pairs"])
        merged["ce_pairs"].extend(part["ce_pairs"])
    merged["tight_pairs"] = merged["tight_pairs"][:tight_cap]
    merged["ce_pairs"] = merged["ce_pairs"][:COUNTEREXAMPLE_LIST_CAP]
    return merged


def _partition_ranges(total: int, partitions: int) -> list[tuple[int, int]]:
    """Contiguous mask ranges [1, total) split by leading index bits."""
    span = total - 1
    chunk = (span + partitions - 1) // partitions
    ranges = []
    lo = 1
    while lo < total:
        hi = min(lo + chunk, total)
        ranges.append((lo, hi))
        lo = hi
    return ranges


def _materialize(universe: _Universe, theorem: str, merged: dict, attach: bool) -> tuple[list, list]:
    tight_entries = []
    for amask, bmask in merged["tight_pairs"]:
        if bmask is None:
            info = _single_instance(universe, theorem, amask)
            entry = _single_entry(universe, info)
        else:
            info = _pair_instance(universe, theorem, amask, bmask)
            entry = _pair_entry(universe, theorem, info)
        if attach:
            cert = _certificate_for(universe, theorem, info)
            if cert is not None:
                entry["certificate"] = cert.to_json_dict()
        tight_entries.append(entry)
    ce_entries = []
    for amask, bmask in merged["ce_pairs"]:
        if bmask is None:
            info = _single_instance(universe, theorem, amask)
            ce_entries.append(_single_entry(universe, info))
        else:
            info = _pair_instance(universe, theorem, amask, bmask)
            ce_entries.append(_pair_entry(universe, theorem, info))
    return tight_entries, ce_entries


def _certificate_for(universe: _Universe, theorem: str, info: dict):
    from . import certify

    if theorem == "cover":
        return certify.hyperbola_cover_certificate(
            universe.element_set(info["amask"]), universe.element_set(info["bmask"])
        )
    if theorem in ("additive", "mult") and info["c_indices"]:
        builder = (
            certify.additive_cover_certificate
            if theorem == "additive"
            else certify.multiplicative_cover_certificate
        )
        c = universe.residues[info["c_indices"][0]]
        return builder(
            universe.element_set(info["amask"]),
            universe.element_set(info["bmask"]),
            c,
        )
    if theorem == "main" and info.get("qualifying"):
        c = universe.residues[info["qualifying"][0][0]]
        return symmetric_pair_certificate(universe.element_set(info["amask"]), c)
    return None


# --------------------------------------------------------------------------
# public entry points
# --------------------------------------------------------------------------


def exhaustive_verify(config: SweepConfig, jobs: int = 1) -> Report:
    """Enumerate every subset pair (or set) within budget and check the bound.

    Deterministic given the configuration; the partitioned sweep merges to
    the same report as a single-partition run.
    """
    config.validate()
    if config.samples is not None:
        return hunt_counterexample(config)
    mode = config.resolved_mode()
    started = time.monotonic()
    per_prime: list[PrimeStats] = []
    for p in config.primes:
        universe = _universe(p, mode)
        total = 1 << universe.m
        is_pair = config.theorem in PAIR_THEOREMS
        instance_count = (total - 1) ** 2 if is_pair else total - 1
        if instance_count > config.budget:
            raise ValueError(
                f"exhaustive sweep at p = {p} needs {instance_count} checks, "
                f"over the budget of {config.budget}"
            )
        tasks = []
        for a_lo, a_hi in _partition_ranges(total, config.partitions):
            if is_pair:
                payload = (
                    p,
                    mode.value,
                    config.theorem,
                    a_lo,
                    a_hi,
                    config.max_set_size,
                    config.tight_cap,
                )
                tasks.append(("pair", payload))
            else:
                payload = (
                    p,
                    config.theorem,
                    a_lo,
                    a_hi,
                    config.max_set_size,
                    config.tight_cap,
                )
                tasks.append(("single", payload))
        if jobs > 1 and len(tasks) > 1:
            with multiprocessing.get_context("fork").Pool(jobs) as pool:
                partials = pool.map(_partition_worker, tasks)
        else:
            partials = [_partition_worker(task) for task in tasks]
        merged = _merge_partials(partials, config.tight_cap)
        tight_entries, ce_entries = _materialize(
            universe, config.theorem, merged, config.attach_certificates
        )
        per_prime.append(
            PrimeStats(
                p=p,
                examined=merged["examined"],
                hypothesis_satisfying=merged["hyp"],
                bound_holding=merged["holding"],
                tight_count=merged["tight_count"],
                counterexample_count=merged["ce_count"],
                contradictions=merged["contradictions"],
                tight=tight_entries,
                counterexamples=ce_entries,
            )
        )
    return Report(
        config=config.echo(),
        prng=None,
        per_prime=per_prime,
        wall_time_s=time.monotonic() - started,
    )


def _sample_mask(rng: SplitMix64, m: int, max_set_size: int | None) -> int:
    """One random nonempty subset mask; documented draw order for replay.

    With a size cap: draw size = 1 + (word mod min(cap, m)), then draw that
    many distinct indices, redrawing collisions.  Without a cap: draw
    ceil(m / 64) words, truncate to m bits, redraw an empty mask.
    """
    if max_set_size is not None:
        size = 1 + rng.below(min(max_set_size, m))
        mask = 0
        while bin(mask).count("1") < size:
            mask |= 1 << rng.below(m)
        return mask
    while True:
        mask = 0
        for chunk in range((m + 63) // 64):
            mask |= rng.next_word() << (64 * chunk)
        mask &= (1 << m) - 1
        if mask:
            return mask


def hunt_counterexample(config: SweepConfig) -> Report:
    """Sampled version of the sweep: seeded, reproducible, same checks."""
    config.validate()
    if config.samples is None:
        raise ValueError("hunt_counterexample needs a sample count")
    mode = config.resolved_mode()
    started = time.monotonic()
    rng = SplitMix64(config.seed)
    per_prime: list[PrimeStats] = []
    for p in config.primes:
        universe = _universe(p, mode)
        m = universe.m
        is_pair = config.theorem in PAIR_THEOREMS
        stats = PrimeStats(p=p)
        tight_pairs: list[tuple[int, int | None]] = []
        ce_pairs: list[tuple[int, int | None]] = []
        for _ in range(config.samples):
            amask = _sample_mask(rng, m, config.max_set_size)
            bmask = _sample_mask(rng, m, config.max_set_size) if is_pair else None
            if is_pair:
                info = _pair_instance(universe, config.theorem, amask, bmask)
            else:
                info = _single_instance(universe, config.theorem, amask)
            stats.examined += 1
            if not info["hyp_units"]:
                continue
            stats.hypothesis_satisfying += info["hyp_units"]
            if info["bound_ok"]:
                stats.bound_holding += info["hyp_units"]
                if info["size"] == info["bound"]:
                    stats.tight_count += 1
                    if len(tight_pairs) < config.tight_cap:
                        tight_pairs.append((amask, bmask))
            else:
                stats.counterexample_count += 1
                if len(ce_pairs) < COUNTEREXAMPLE_LIST_CAP:
                    ce_pairs.append((amask, bmask))
                if config.theorem == "main":
                    # replay the certificate so a violation is classified
                    a_set = universe.element_set(amask)
                    for c_idx, _, _ in info["qualifying"]:
                        try:
                            symmetric_pair_certificate(
                                a_set, universe.residues[c_idx]
                            )
                        except TheoremContradictionError:
                            stats.contradictions += 1
        merged = {
            "tight_pairs": tight_pairs,
            "ce_pairs": ce_pairs,
        }
        stats.tight, stats.counterexamples = _materialize(
            universe,
            config.theorem,
            {**merged, "examined": 0, "hyp": 0, "holding": 0, "tight_count": 0, "ce_count": 0},
            config.attach_certificates,
        )
        per_prime.append(stats)
    return Report(
        config=config.echo(),
        prng={"algorithm": PRNG_ALGORITHM, "seed": config.seed},
        per_prime=per_prime,
        wall_time_s=time.monotonic() - started,
    )


# --------------------------------------------------------------------------
# extremal example construction
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class TightExample:
    """Root-of-unity family meeting |A x. B| = |A| + |B| - 3 with equality."""

    n: int
    field: PrimeField
    w: FieldElement
    A: ElementSet
    B: ElementSet
    c: FieldElement
    product_size: int
    unique_representation: tuple[int, int] | None
    degenerate: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.field.p,
            "w": self.w.value,
            "A": list(self.A.values),
            "B": list(self.B.values),
            "c": self.c.value,
            "product_size": self.product_size,
            "unique_representation": (
                list(self.unique_representation)
                if self.unique_representation is not None
                else None
            ),
            "degenerate": self.degenerate,
        }


def construct_tight_example(n: int) -> TightExample:
    """Powers of a primitive (2n-4)-th root of unity: A of size n, B of n-1.

    Finds the smallest prime p = 1 (mod 2n-4), takes w of order exactly
    2n-4, and sets A = {w^0..w^(n-1)}, B = {w^0..w^(n-2)}, target 1.  For
    n >= 4 the construction checks, and fails loudly otherwise, that
    |A| = n, |B| = n - 1, the restricted product set has exactly 2n - 4
    elements, and 1 is represented only by (w^(n-1), w^(n-3)) --- a pair
    whose (n-2)-th powers coincide.  n = 3 degenerates (w has order 2, so A
    collapses) and is returned unchecked.
    """
    if n < 3:
        raise ValueError("tight example needs n >= 3")
    d = 2 * n - 4
    f = find_prime_with_subgroup(d, start=3)
    w = primitive_root_of_unity(f, d)
    powers = [pow(w.value, k, f.p) for k in range(n)]
    A = ElementSet(f, GroupMode.MULTIPLICATIVE, powers)
    B = ElementSet(f, GroupMode.MULTIPLICATIVE, powers[: n - 1])
    c = f.one()
    products = restricted_combine(A, B)
    reps = representations(A, B, c, restricted=True)
    degenerate = n == 3
    unique_rep = None
    if not degenerate:
        a_val = pow(w.value, n - 1, f.p)
        b_val = pow(w.value, n - 3, f.p)
        if len(A) != n or len(B) != n - 1:
            raise AssertionError(f"power sets collapsed: |A|={len(A)}, |B|={len(B)}")
        if len(products) != d:
            raise AssertionError(f"|Ax.B| = {len(products)}, wanted {d}")
        if len(reps) != 1 or (reps[0].a.value, reps[0].b.value) != (a_val, b_val):
            raise AssertionError(f"1 is not uniquely represented by (w^{n-1}, w^{n-3})")
        if pow(a_val, n - 2, f.p) != pow(b_val, n - 2, f.p):
            raise AssertionError("(n-2)-th powers of the pair should coincide")
        unique_rep = (a_val, b_val)
    return TightExample(
        n=n,
        field=f,
        w=w,
        A=A,
        B=B,
        c=c,
        product_size=len(products),
        unique_representation=unique_rep,
        degenerate=degenerate,
    )
