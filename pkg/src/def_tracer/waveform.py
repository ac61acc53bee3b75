"""Sampled-waveform data model, network topology, and dataset ingestion.

File formats
------------
Waveform file: columnar comma-separated text. Optional leading metadata
lines of the form ``# key: value`` (currently ``unit``), then one header
row, then one row per sample::

    # unit: pu
    time,V:bus1:a,V:bus1:b,V:bus1:c,I:bus1:line12:a,...
    0,1.02,...

Channel names are ``V:<node>:{a|b|c}`` for node voltages and
``I:<node>:<element>:{a|b|c}`` for the current flowing out of ``<node>``
into ``<element>`` (a line or a shunt element). The ``time`` column must
be a uniform grid; resampling is out of scope and misaligned input is
rejected.

Topology file: line-oriented text, ``#`` comments allowed::

    node bus1
    edge line12 bus1 bus2
    shunt gen1 bus1

Config file: ``key = value`` lines mirroring :class:`AnalysisConfig`,
``#`` comments allowed. Thresholds accept a ``rel`` suffix
(e.g. ``eps_edge = 0.05rel``) meaning a fraction of the per-mode maximum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    AlignmentError,
    ConfigurationError,
    DataQualityError,
    IngestionError,
    RangeError,
)

PHASES = ("a", "b", "c")

# Relative tolerance on sample spacing before the grid counts as non-uniform.
_GRID_RTOL = 1e-6


def _freeze(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class SampleSeries:
    """Uniformly sampled real-valued series.

    Parameters
    ----------
    values : array_like
        Sample values (per-unit or SI; the dataset metadata declares which).
    fs : float
        Sampling rate in Hz.
    t0 : float
        Time of the first sample in seconds.
    """

    values: np.ndarray
    fs: float
    t0: float = 0.0

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 1:
            raise DataQualityError("sample series must be one-dimensional")
        if arr.size < 2:
            raise DataQualityError("sample series needs at least 2 samples")
        if not (self.fs > 0 and math.isfinite(self.fs)):
            raise DataQualityError(f"sampling rate must be positive, got {self.fs}")
        bad = np.flatnonzero(~np.isfinite(arr))
        if bad.size:
            raise DataQualityError(f"non-finite sample at index {int(bad[0])}")
        object.__setattr__(self, "values", _freeze(arr))

    @property
    def n(self) -> int:
        return self.values.size

    @property
    def duration(self) -> float:
        """Covered span in seconds (n samples at spacing 1/fs)."""
        return self.n / self.fs

    @property
    def end_time(self) -> float:
        return self.t0 + self.duration

    def times(self) -> np.ndarray:
        return self.t0 + np.arange(self.n) / self.fs

    def with_values(self, values) -> "SampleSeries":
        """Same time base, new samples."""
        return SampleSeries(values=values, fs=self.fs, t0=self.t0)


@dataclass(frozen=True)
class ThreePhaseSignal:
    """One a/b/c channel triple on a shared time base."""

    a: SampleSeries
    b: SampleSeries
    c: SampleSeries

    def __post_init__(self):
        ref = self.a
        for name in ("b", "c"):
            ch: SampleSeries = getattr(self, name)
            if ch.fs != ref.fs or ch.t0 != ref.t0 or ch.n != ref.n:
                raise AlignmentError(
                    f"phase {name} does not share the time base of phase a"
                )

    @property
    def fs(self) -> float:
        return self.a.fs

    @property
    def t0(self) -> float:
        return self.a.t0

    @property
    def n(self) -> int:
        return self.a.n

    @property
    def duration(self) -> float:
        return self.a.duration

    def channels(self) -> tuple[SampleSeries, SampleSeries, SampleSeries]:
        return (self.a, self.b, self.c)

    def stack(self) -> np.ndarray:
        """(3, n) array in a, b, c order."""
        return np.vstack([self.a.values, self.b.values, self.c.values])

    def scaled(self, factor: float) -> "ThreePhaseSignal":
        return ThreePhaseSignal(
            a=self.a.with_values(factor * self.a.values),
            b=self.b.with_values(factor * self.b.values),
            c=self.c.with_values(factor * self.c.values),
        )


@dataclass(frozen=True)
class Edge:
    """Series element (transmission line) between two nodes."""

    id: str
    node_i: str
    node_j: str


@dataclass(frozen=True)
class Shunt:
    """Shunt element (generator, compensator, load) attached to one node."""

    id: str
    node: str


@dataclass(frozen=True)
class Topology:
    """Node/edge/shunt structure of the monitored network."""

    nodes: tuple[str, ...]
    edges: tuple[Edge, ...] = ()
    shunts: tuple[Shunt, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(
            self, "edges", tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        )
        object.__setattr__(
            self, "shunts", tuple(s if isinstance(s, Shunt) else Shunt(*s) for s in self.shunts)
        )
        if len(set(self.nodes)) != len(self.nodes):
            raise IngestionError("duplicate node id in topology")
        node_set = set(self.nodes)
        element_ids = [e.id for e in self.edges] + [s.id for s in self.shunts]
        if len(set(element_ids)) != len(element_ids):
            raise IngestionError("duplicate element id in topology")
        for e in self.edges:
            if e.node_i == e.node_j:
                raise IngestionError(f"edge {e.id} is a self-loop")
            for n in (e.node_i, e.node_j):
                if n not in node_set:
                    raise IngestionError(f"edge {e.id} references unknown node {n}")
        for s in self.shunts:
            if s.node not in node_set:
                raise IngestionError(f"shunt {s.id} references unknown node {s.node}")

    def edge(self, element_id: str) -> Edge:
        for e in self.edges:
            if e.id == element_id:
                return e
        raise KeyError(element_id)

    def shunt(self, element_id: str) -> Shunt:
        for s in self.shunts:
            if s.id == element_id:
                return s
        raise KeyError(element_id)

    def is_edge(self, element_id: str) -> bool:
        return any(e.id == element_id for e in self.edges)

    def is_shunt(self, element_id: str) -> bool:
        return any(s.id == element_id for s in self.shunts)

    def elements_at(self, node: str) -> list[str]:
        """Ids of all elements incident to a node, edges first."""
        out = [e.id for e in self.edges if node in (e.node_i, e.node_j)]
        out += [s.id for s in self.shunts if s.node == node]
        return out

    def incident(self, node: str, element_id: str) -> bool:
        if self.is_edge(element_id):
            e = self.edge(element_id)
            return node in (e.node_i, e.node_j)
        if self.is_shunt(element_id):
            return self.shunt(element_id).node == node
        return False

    def other_end(self, edge_id: str, node: str) -> str:
        e = self.edge(edge_id)
        if node == e.node_i:
            return e.node_j
        if node == e.node_j:
            return e.node_i
        raise KeyError(f"{node} is not an endpoint of {edge_id}")


@dataclass(frozen=True)
class TerminalMeasurement:
    """Voltage/current pair recorded at one (node, incident element) terminal.

    ``i`` is the current flowing out of ``node`` into ``element``.
    """

    node: str
    element: str
    v: ThreePhaseSignal
    i: ThreePhaseSignal

    def __post_init__(self):
        if (
            self.v.fs != self.i.fs
            or self.v.t0 != self.i.t0
            or self.v.n != self.i.n
        ):
            raise AlignmentError(
                f"voltage and current of terminal ({self.node}, {self.element}) "
                "are not time-aligned"
            )

    @property
    def terminal(self) -> tuple[str, str]:
        return (self.node, self.element)

    @property
    def fs(self) -> float:
        return self.v.fs

    @property
    def t0(self) -> float:
        return self.v.t0

    @property
    def duration(self) -> float:
        return self.v.duration


@dataclass(frozen=True)
class Dataset:
    """A validated topology plus its terminal measurements."""

    topology: Topology
    measurements: tuple[TerminalMeasurement, ...]
    unit: str = "pu"
    partially_observed_edges: tuple[str, ...] = ()
    unobserved_edges: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "measurements", tuple(self.measurements))

    @property
    def fs(self) -> float:
        return self.measurements[0].fs

    @property
    def t0(self) -> float:
        return self.measurements[0].t0

    @property
    def duration(self) -> float:
        return self.measurements[0].duration

    def measurement(self, node: str, element: str) -> TerminalMeasurement:
        for m in self.measurements:
            if m.node == node and m.element == element:
                return m
        raise KeyError((node, element))


@dataclass(frozen=True)
class Threshold:
    """Absolute value, or fraction of a per-mode maximum when relative."""

    value: float
    relative: bool = False

    def __post_init__(self):
        if self.value < 0:
            raise ConfigurationError(f"threshold must be >= 0, got {self.value}")

    @classmethod
    def parse(cls, text) -> "Threshold":
        if isinstance(text, Threshold):
            return text
        if isinstance(text, (int, float)):
            return cls(float(text))
        s = str(text).strip().lower()
        rel = s.endswith("rel")
        if rel:
            s = s[:-3]
        try:
            return cls(float(s), relative=rel)
        except ValueError:
            raise ConfigurationError(f"cannot parse threshold {text!r}") from None

    def resolve(self, scale: float) -> float:
        return self.value * scale if self.relative else self.value

    def __str__(self) -> str:
        return f"{self.value:g}rel" if self.relative else f"{self.value:g}"


@dataclass(frozen=True)
class AnalysisConfig:
    """All tunable parameters of one analysis run."""

    f0: float = 60.0
    ref_node: str | None = None
    theta0: float | None = None
    analysis_window: tuple[float, float] | None = None
    t_win: float = 0.5
    eps_edge: Threshold = field(default_factory=lambda: Threshold(0.05, relative=True))
    eps_node: Threshold = field(default_factory=lambda: Threshold(0.05, relative=True))
    segment_len: float = 1.0
    overlap: float = 0.5
    min_prominence_db: float = 10.0
    max_modes: int = 5
    freq_floor: float = 5.0
    band_halfwidth: float | None = None
    filter_order: int = 4
    detrend: str = "mean"

    def __post_init__(self):
        if not self.f0 > 0:
            raise ConfigurationError(f"f0 must be positive, got {self.f0}")
        if not self.t_win > 0:
            raise ConfigurationError(f"t_win must be positive, got {self.t_win}")
        if not 0 <= self.overlap < 1:
            raise ConfigurationError(f"overlap must be in [0, 1), got {self.overlap}")
        if self.max_modes < 1:
            raise ConfigurationError("max_modes must be at least 1")
        if self.filter_order < 2 or self.filter_order % 2:
            raise ConfigurationError("filter_order must be an even integer >= 2")
        if self.analysis_window is not None:
            start, end = self.analysis_window
            if not end > start:
                raise ConfigurationError("analysis window end must exceed start")
        mode = self.detrend.split(":", 1)[0]
        if mode not in ("mean", "lowpass"):
            raise ConfigurationError(f"unknown detrend mode {self.detrend!r}")
        if mode == "lowpass":
            try:
                fc = float(self.detrend.split(":", 1)[1])
            except (IndexError, ValueError):
                raise ConfigurationError(
                    "lowpass detrend needs a cutoff, e.g. lowpass:5"
                ) from None
            if not fc > 0:
                raise ConfigurationError("detrend cutoff must be positive")

    @property
    def detrend_mode(self) -> str:
        return self.detrend.split(":", 1)[0]

    @property
    def detrend_fc(self) -> float | None:
        if self.detrend_mode == "lowpass":
            return float(self.detrend.split(":", 1)[1])
        return None

    def resolved(self) -> dict:
        """Full parameter set, defaults included, for report embedding."""
        return {
            "f0": self.f0,
            "ref_node": self.ref_node,
            "theta0": self.theta0,
            "analysis_window": list(self.analysis_window) if self.analysis_window else None,
            "t_win": self.t_win,
            "eps_edge": str(self.eps_edge),
            "eps_node": str(self.eps_node),
            "segment_len": self.segment_len,
            "overlap": self.overlap,
            "min_prominence_db": self.min_prominence_db,
            "max_modes": self.max_modes,
            "freq_floor": self.freq_floor,
            "band_halfwidth": self.band_halfwidth,
            "filter_order": self.filter_order,
            "detrend": self.detrend,
        }

    def override(self, **kwargs) -> "AnalysisConfig":
        kwargs = {k: v for k, v in kwargs.items() if v is not None}
        for key in ("eps_edge", "eps_node"):
            if key in kwargs:
                kwargs[key] = Threshold.parse(kwargs[key])
        return replace(self, **kwargs)


_CONFIG_KEYS = {
    "f0": float,
    "ref_node": str,
    "theta0": float,
    "t_win": float,
    "segment_len": float,
    "overlap": float,
    "min_prominence_db": float,
    "max_modes": int,
    "freq_floor": float,
    "band_halfwidth": float,
    "filter_order": int,
    "detrend": str,
}


def load_config(path) -> AnalysisConfig:
    """Parse a key-value config file into an :class:`AnalysisConfig`."""
    values: dict = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigurationError(f"{path}:{lineno}: expected 'key = value'")
            key, _, val = line.partition("=")
            key, val = key.strip(), val.strip()
            if key in ("eps_edge", "eps_node"):
                values[key] = Threshold.parse(val)
            elif key == "window":
                try:
                    start, _, end = val.partition(":")
                    values["analysis_window"] = (float(start), float(end))
                except ValueError:
                    raise ConfigurationError(
                        f"{path}:{lineno}: window must be start:end"
                    ) from None
            elif key in _CONFIG_KEYS:
                try:
                    values[key] = _CONFIG_KEYS[key](val)
                except ValueError:
                    raise ConfigurationError(
                        f"{path}:{lineno}: bad value for {key}: {val!r}"
                    ) from None
            else:
                raise ConfigurationError(f"{path}:{lineno}: unknown config key {key!r}")
    return AnalysisConfig(**values)


def save_config(config: AnalysisConfig, path) -> None:
    with open(path, "w") as fh:
        for key, val in config.resolved().items():
            if val is None:
                continue
            if key == "analysis_window":
                fh.write(f"window = {val[0]:.17g}:{val[1]:.17g}\n")
            else:
                fh.write(f"{key} = {val}\n")


# ---------------------------------------------------------------------------
# topology file I/O
# ---------------------------------------------------------------------------

def load_topology(path) -> Topology:
    nodes: list[str] = []
    edges: list[Edge] = []
    shunts: list[Shunt] = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            kind = parts[0]
            if kind == "node" and len(parts) == 2:
                nodes.append(parts[1])
            elif kind == "edge" and len(parts) == 4:
                edges.append(Edge(parts[1], parts[2], parts[3]))
            elif kind == "shunt" and len(parts) == 3:
                shunts.append(Shunt(parts[1], parts[2]))
            else:
                raise IngestionError(f"{path}:{lineno}: cannot parse {raw.strip()!r}")
    return Topology(nodes=tuple(nodes), edges=tuple(edges), shunts=tuple(shunts))


def save_topology(topo: Topology, path) -> None:
    with open(path, "w") as fh:
        for n in topo.nodes:
            fh.write(f"node {n}\n")
        for e in topo.edges:
            fh.write(f"edge {e.id} {e.node_i} {e.node_j}\n")
        for s in topo.shunts:
            fh.write(f"shunt {s.id} {s.node}\n")


# ---------------------------------------------------------------------------
# waveform file I/O
# ---------------------------------------------------------------------------

def _parse_channel(name: str) -> tuple[str, str, str | None, str]:
    """Return (kind, node, element, phase) for a header channel name."""
    parts = name.split(":")
    if parts[0] == "V" and len(parts) == 3 and parts[2] in PHASES:
        return ("V", parts[1], None, parts[2])
    if parts[0] == "I" and len(parts) == 4 and parts[3] in PHASES:
        return ("I", parts[1], parts[2], parts[3])
    raise IngestionError(f"cannot parse channel name {name!r}")


def load_waveforms(path) -> tuple[dict[str, np.ndarray], np.ndarray, dict[str, str]]:
    """Read a waveform file.

    Returns (channel name -> samples, time vector, metadata dict). Non-finite
    samples and non-uniform time grids are rejected here so every series
    downstream is clean.
    """
    metadata: dict[str, str] = {}
    with open(path) as fh:
        header = None
        data_lines = []
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if ":" in body and header is None:
                    key, _, val = body.partition(":")
                    metadata[key.strip()] = val.strip()
                continue
            if header is None:
                header = [c.strip() for c in line.split(",")]
            else:
                data_lines.append(line)
    if header is None:
        raise IngestionError(f"{path}: no header row")
    if header[0] != "time":
        raise IngestionError(f"{path}: first column must be 'time', got {header[0]!r}")
    if len(set(header)) != len(header):
        raise IngestionError(f"{path}: duplicate channel in header")
    try:
        table = np.loadtxt(data_lines, delimiter=",", ndmin=2)
    except ValueError as exc:
        raise IngestionError(f"{path}: malformed data row ({exc})") from None
    if table.shape[0] < 2:
        raise IngestionError(f"{path}: need at least 2 samples")
    if table.shape[1] != len(header):
        raise IngestionError(
            f"{path}: {table.shape[1]} columns but {len(header)} header names"
        )
    time = table[:, 0]
    dt = np.diff(time)
    dt_med = float(np.median(dt))
    if dt_med <= 0:
        raise AlignmentError(f"{path}: time column is not increasing")
    if np.max(np.abs(dt - dt_med)) > _GRID_RTOL * dt_med:
        k = int(np.argmax(np.abs(dt - dt_med)))
        raise AlignmentError(
            f"{path}: non-uniform sample spacing near row {k + 1} "
            f"(dt={dt[k]:.3e}, expected {dt_med:.3e})"
        )
    channels = {}
    for col, name in enumerate(header[1:], start=1):
        samples = table[:, col]
        bad = np.flatnonzero(~np.isfinite(samples))
        if bad.size:
            raise DataQualityError(
                f"{path}: non-finite sample in channel {name} at index {int(bad[0])}"
            )
        channels[name] = samples
    return channels, time, metadata


def _series(samples: np.ndarray, fs: float, t0: float) -> SampleSeries:
    return SampleSeries(values=samples, fs=fs, t0=t0)


def load_dataset(waveform_file, topology_file) -> Dataset:
    """Ingest waveform + topology files into a validated :class:`Dataset`.

    Every channel triple is checked for completeness, every referenced node
    and element must exist in the topology, and every shunt element must have
    its terminal recorded. Edges may be observed at both ends, one end
    (flagged partially observed), or not at all (flagged unobserved).
    """
    topo = load_topology(topology_file)
    channels, time, metadata = load_waveforms(waveform_file)
    fs = 1.0 / float(np.median(np.diff(time)))
    t0 = float(time[0])
    unit = metadata.get("unit", "pu")

    v_groups: dict[str, dict[str, np.ndarray]] = {}
    i_groups: dict[tuple[str, str], dict[str, np.ndarray]] = {}
    for name, samples in channels.items():
        kind, node, element, phase = _parse_channel(name)
        if node not in topo.nodes:
            raise IngestionError(f"channel {name}: unknown node {node}")
        if kind == "V":
            v_groups.setdefault(node, {})[phase] = samples
        else:
            if not topo.incident(node, element):
                raise IngestionError(
                    f"channel {name}: element {element} is not incident to node {node}"
                )
            i_groups.setdefault((node, element), {})[phase] = samples

    def triple(group: Mapping[str, np.ndarray], prefix: str) -> ThreePhaseSignal:
        for ph in PHASES:
            if ph not in group:
                raise IngestionError(f"missing channel {prefix}:{ph}")
        return ThreePhaseSignal(
            a=_series(group["a"], fs, t0),
            b=_series(group["b"], fs, t0),
            c=_series(group["c"], fs, t0),
        )

    voltages = {node: triple(group, f"V:{node}") for node, group in v_groups.items()}

    measurements = []
    for (node, element), group in sorted(i_groups.items()):
        if node not in voltages:
            raise IngestionError(
                f"current I:{node}:{element} has no matching voltage V:{node}"
            )
        measurements.append(
            TerminalMeasurement(
                node=node,
                element=element,
                v=voltages[node],
                i=triple(group, f"I:{node}:{element}"),
            )
        )

    measured = {(m.node, m.element) for m in measurements}
    warnings = []
    partial = []
    unobserved = []
    for e in topo.edges:
        ends = sum(((n, e.id) in measured) for n in (e.node_i, e.node_j))
        if ends == 1:
            partial.append(e.id)
            warnings.append(
                f"edge {e.id} measured at one end only; "
                "two-end consistency check unavailable"
            )
        elif ends == 0:
            unobserved.append(e.id)
            warnings.append(f"edge {e.id} has no measured end")
    for s in topo.shunts:
        if (s.node, s.id) not in measured:
            raise IngestionError(f"shunt element {s.id} has no terminal measurement")

    return Dataset(
        topology=topo,
        measurements=tuple(measurements),
        unit=unit,
        partially_observed_edges=tuple(partial),
        unobserved_edges=tuple(unobserved),
        warnings=tuple(warnings),
    )


def save_dataset(dataset: Dataset, waveform_file, topology_file=None) -> None:
    """Write a dataset back to the columnar text format.

    Values are written with ``%.17g`` so a load/save cycle is lossless at
    float64 precision.
    """
    if topology_file is not None:
        save_topology(dataset.topology, topology_file)
    columns: list[tuple[str, np.ndarray]] = []
    seen_v: set[str] = set()
    for m in dataset.measurements:
        if m.node not in seen_v:
            seen_v.add(m.node)
            for ph, ch in zip(PHASES, m.v.channels()):
                columns.append((f"V:{m.node}:{ph}", ch.values))
        for ph, ch in zip(PHASES, m.i.channels()):
            columns.append((f"I:{m.node}:{m.element}:{ph}", ch.values))
    time = dataset.measurements[0].v.a.times()
    with open(waveform_file, "w") as fh:
        fh.write(f"# unit: {dataset.unit}\n")
        fh.write("time," + ",".join(name for name, _ in columns) + "\n")
        data = np.column_stack([time] + [vals for _, vals in columns])
        np.savetxt(fh, data, delimiter=",", fmt="%.17g")


# ---------------------------------------------------------------------------
# time slicing
# ---------------------------------------------------------------------------

def slice_series(x: SampleSeries, start: float, end: float) -> SampleSeries:
    """Samples with t in [start, end). Grid positions are preserved."""
    if end - start < 2.0 / x.fs:
        raise RangeError(f"slice [{start}, {end}) shorter than 2 samples")
    eps = 1e-9 / x.fs
    if start < x.t0 - eps or end > x.end_time + eps:
        raise RangeError(
            f"slice [{start}, {end}) outside recorded span "
            f"[{x.t0}, {x.end_time})"
        )
    k0 = int(math.ceil((start - x.t0) * x.fs - 1e-9))
    k1 = int(math.ceil((end - x.t0) * x.fs - 1e-9))
    k0 = max(k0, 0)
    k1 = min(k1, x.n)
    return SampleSeries(values=x.values[k0:k1], fs=x.fs, t0=x.t0 + k0 / x.fs)


def slice_signal(x: ThreePhaseSignal, start: float, end: float) -> ThreePhaseSignal:
    return ThreePhaseSignal(
        a=slice_series(x.a, start, end),
        b=slice_series(x.b, start, end),
        c=slice_series(x.c, start, end),
    )


def time_slice(m: TerminalMeasurement, start: float, end: float) -> TerminalMeasurement:
    """Restrict a terminal measurement to [start, end)."""
    return TerminalMeasurement(
        node=m.node,
        element=m.element,
        v=slice_signal(m.v, start, end),
        i=slice_signal(m.i, start, end),
    )


def slice_dataset(dataset: Dataset, start: float, end: float) -> Dataset:
    return Dataset(
        topology=dataset.topology,
        measurements=tuple(time_slice(m, start, end) for m in dataset.measurements),
        unit=dataset.unit,
        partially_observed_edges=dataset.partially_observed_edges,
        unobserved_edges=dataset.unobserved_edges,
        warnings=dataset.warnings,
    )
