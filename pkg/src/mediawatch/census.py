"""Regional user census and profile-location geocoding.

The census grows in five steps: geolocated seed authors, manual labels over
them, graph expansion ranked by co-occurrence with manual labels over the
top candidates, a binary linear classifier trained on follow-graph
features, and a second expansion labeled automatically by that classifier.
Free-text profile locations resolve through weighted votes across pluggable
geocoding providers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Protocol

import numpy as np

from .polarity.svm import SparseRows, train_binary

GRAPH_TRUNCATION = 5000


class CensusError(Exception):
    pass


class MissingManualLabels(CensusError):
    pass


class SingleClassData(CensusError):
    pass


@dataclass(frozen=True)
class SocialUser:
    user_id: str
    followers_total: int = 0
    friends_total: int = 0
    location_text: str | None = None
    geo: tuple[float, float] | None = None  # (lat, lon)

    def __post_init__(self) -> None:
        if self.followers_total < 0 or self.friends_total < 0:
            raise ValueError("follower/friend counts must be >= 0")


@dataclass(frozen=True)
class CensusEntry:
    user_id: str
    provenance: str  # seed_geo | manual | classified
    score: float = 0.0


@dataclass(frozen=True)
class CensusFeatures:
    followers_total: int
    friends_total: int
    in_census_followers: int
    in_census_friends: int

    @property
    def rel_followers(self) -> float:
        return self.in_census_followers / max(1, self.followers_total)

    @property
    def rel_friends(self) -> float:
        return self.in_census_friends / max(1, self.friends_total)


@dataclass(frozen=True)
class BBox:
    """(west, south, east, north) in degrees."""

    west: float
    south: float
    east: float
    north: float

    def contains(self, geo: tuple[float, float]) -> bool:
        lat, lon = geo
        return self.south <= lat <= self.north and self.west <= lon <= self.east

    @classmethod
    def parse(cls, text: str) -> "BBox":
        west, south, east, north = (float(p) for p in text.split(","))
        return cls(west, south, east, north)


class FollowGraph:
    """Directed follow graph; edge u->v means u follows v.

    Adjacency lists keep insertion order so per-user truncation to the
    first N followers/friends is well defined.
    """

    def __init__(self) -> None:
        self.friends: dict[str, list[str]] = {}  # u -> users u follows
        self.followers: dict[str, list[str]] = {}  # v -> users following v

    def add_edge(self, from_user: str, to_user: str) -> None:
        if from_user == to_user:
            raise ValueError(f"self-edge on {from_user!r}")
        self.friends.setdefault(from_user, []).append(to_user)
        self.followers.setdefault(to_user, []).append(from_user)

    def friends_of(self, user: str, limit: int = GRAPH_TRUNCATION) -> list[str]:
        return self.friends.get(user, [])[:limit]

    def followers_of(self, user: str, limit: int = GRAPH_TRUNCATION) -> list[str]:
        return self.followers.get(user, [])[:limit]

    def degree(self, user: str) -> tuple[int, int]:
        """(followers_total, friends_total) without truncation."""
        return len(self.followers.get(user, [])), len(self.friends.get(user, []))

    @classmethod
    def load(cls, path: str | Path) -> "FollowGraph":
        graph = cls()
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line.strip() or line.startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 2:
                    raise CensusError(f"{path}:{lineno}: expected from<TAB>to")
                graph.add_edge(parts[0], parts[1])
        return graph


# ---------------------------------------------------------------------------
# Step (i): seeds

def collect_seed_users(stream: Iterable, bbox: BBox) -> set[str]:
    """Author ids of geolocated messages falling inside the bbox."""
    seeds: set[str] = set()
    for msg in stream:
        geo = getattr(msg, "geo", None)
        if geo is not None and bbox.contains(geo):
            seeds.add(msg.author_id)
    return seeds


# ---------------------------------------------------------------------------
# Step (iii): candidate expansion and ranking

def rank_candidates(
    census: set[str], graph: FollowGraph, truncation: int = GRAPH_TRUNCATION
) -> list[tuple[str, int]]:
    """Non-census users adjacent to census users, ranked by how many census
    users they follow or are followed by (descending, ties by user id)."""
    cooccurrence: dict[str, set[str]] = {}
    for user in census:
        for neighbor in graph.friends_of(user, truncation):
            if neighbor not in census:
                cooccurrence.setdefault(neighbor, set()).add(user)
        for neighbor in graph.followers_of(user, truncation):
            if neighbor not in census:
                cooccurrence.setdefault(neighbor, set()).add(user)
    ranked = [(candidate, len(users)) for candidate, users in cooccurrence.items()]
    ranked.sort(key=lambda pair: (-pair[1], pair[0]))
    return ranked


def census_features(
    user: str, census: set[str], graph: FollowGraph, truncation: int = GRAPH_TRUNCATION
) -> CensusFeatures:
    followers_total, friends_total = graph.degree(user)
    in_followers = sum(1 for u in graph.followers_of(user, truncation) if u in census)
    in_friends = sum(1 for u in graph.friends_of(user, truncation) if u in census)
    return CensusFeatures(
        followers_total=followers_total,
        friends_total=friends_total,
        in_census_followers=in_followers,
        in_census_friends=in_friends,
    )


# ---------------------------------------------------------------------------
# Step (iv): classifier

_FEATURE_SCALE = GRAPH_TRUNCATION  # totals normalized by the truncation bound


def _feature_vector(f: CensusFeatures) -> dict[int, float]:
    return {
        0: min(f.followers_total, _FEATURE_SCALE) / _FEATURE_SCALE,
        1: min(f.friends_total, _FEATURE_SCALE) / _FEATURE_SCALE,
        2: f.rel_followers,
        3: f.rel_friends,
    }


@dataclass
class CensusClassifier:
    weights: np.ndarray
    bias: float

    def margin(self, features: CensusFeatures) -> float:
        vec = _feature_vector(features)
        return float(sum(self.weights[i] * v for i, v in vec.items()) + self.bias)


@dataclass
class CensusCvReport:
    accuracy: float
    folds: int


def train_census_classifier(
    labeled: list[tuple[CensusFeatures, bool]],
    C: float = 0.1,
    seed: int = 0,
    cv_folds: int = 4,
) -> tuple[CensusClassifier, CensusCvReport]:
    """Binary linear classifier over follow-graph features + k-fold CV report."""
    if not labeled:
        raise CensusError("no labeled users")
    classes = {label for _, label in labeled}
    if len(classes) < 2:
        raise SingleClassData("labels are all one class")
    rows = [_feature_vector(f) for f, _ in labeled]
    y = np.fromiter((1.0 if label else -1.0 for _, label in labeled), dtype=np.float64)
    X = SparseRows.from_dicts(rows, 4)
    result = train_binary(X, y, C=C, seed=seed, max_epochs=2000, tol=1e-6)
    classifier = CensusClassifier(weights=result.weights, bias=result.bias)

    # Stratified k-fold accuracy (seeded, deterministic).
    rng = np.random.default_rng(seed)
    pos_idx = [i for i, (_, label) in enumerate(labeled) if label]
    neg_idx = [i for i, (_, label) in enumerate(labeled) if not label]
    folds: list[list[int]] = [[] for _ in range(cv_folds)]
    for group in (pos_idx, neg_idx):
        order = rng.permutation(len(group))
        for j, pos in enumerate(order):
            folds[j % cv_folds].append(group[pos])
    correct = 0
    total = 0
    for fold in folds:
        held = set(fold)
        train_i = [i for i in range(len(labeled)) if i not in held]
        if len({labeled[i][1] for i in train_i}) < 2:
            raise SingleClassData("degenerate CV split")
        Xf = SparseRows.from_dicts([rows[i] for i in train_i], 4)
        yf = y[train_i]
        rf = train_binary(Xf, yf, C=C, seed=seed, max_epochs=2000, tol=1e-6)
        for i in fold:
            margin = float(sum(rf.weights[k] * v for k, v in rows[i].items()) + rf.bias)
            predicted = margin > 0
            correct += int(predicted == labeled[i][1])
            total += 1
    return classifier, CensusCvReport(accuracy=correct / total if total else 0.0, folds=cv_folds)


# ---------------------------------------------------------------------------
# Step (i)-(v): the full build

@dataclass
class CensusBuildReport:
    seeds_found: int
    seeds_accepted: int
    manual_candidates: int
    manual_accepted: int
    classifier_cv_accuracy: float
    auto_candidates: int
    auto_accepted: int


def build_census(
    stream: Iterable,
    graph: FollowGraph,
    bbox: BBox,
    manual_labels: dict[str, bool] | None,
    n_manual: int = 10_000,
    n_auto: int = 20_000,
    truncation: int = GRAPH_TRUNCATION,
    seed: int = 0,
) -> tuple[dict[str, CensusEntry], CensusBuildReport]:
    """Run the five-step census build; returns entries keyed by user id."""
    if manual_labels is None:
        raise MissingManualLabels("manual label file is required for steps (ii)/(iii)")

    # (i) seeds from geolocated messages
    seeds = collect_seed_users(stream, bbox)
    # (ii) manual labels over seeds; unlabeled seeds are left out
    entries: dict[str, CensusEntry] = {}
    for user in sorted(seeds):
        if manual_labels.get(user):
            entries[user] = CensusEntry(user_id=user, provenance="seed_geo")
    census = set(entries)

    # (iii) expansion, rank by co-occurrence, manual labels over top n_manual
    ranked = rank_candidates(census, graph, truncation)
    manual_slice = [user for user, _ in ranked[:n_manual]]
    if not manual_slice:
        # Nothing adjacent to the seeds: steps (iv)/(v) have no input.
        report = CensusBuildReport(
            seeds_found=len(seeds),
            seeds_accepted=len(entries),
            manual_candidates=0,
            manual_accepted=0,
            classifier_cv_accuracy=0.0,
            auto_candidates=0,
            auto_accepted=0,
        )
        return entries, report
    manual_labeled: list[tuple[str, bool]] = []
    manual_accepted = 0
    for user in manual_slice:
        label = manual_labels.get(user)
        if label is None:
            continue
        manual_labeled.append((user, label))
        if label:
            entries[user] = CensusEntry(user_id=user, provenance="manual")
            manual_accepted += 1
    if not manual_labeled:
        raise MissingManualLabels("no manual labels cover the ranked candidates")
    census = set(entries)

    # (iv) classifier over the manually labeled candidates. Features are
    # computed against the census as it stands after manual acceptance (self
    # excluded) so training and step-(v) classification see features with
    # the same reference population.
    labeled_features = [
        (census_features(u, census - {u}, graph, truncation), label)
        for u, label in manual_labeled
    ]
    classifier, cv_report = train_census_classifier(labeled_features, seed=seed)

    # (v) second expansion from all accepted users, top n_auto auto-labeled;
    # a positive margin admits.
    ranked2 = rank_candidates(census, graph, truncation)
    auto_slice = [user for user, _ in ranked2[:n_auto]]
    auto_accepted = 0
    for user in auto_slice:
        features = census_features(user, census, graph, truncation)
        margin = classifier.margin(features)
        if margin > 0:
            entries[user] = CensusEntry(user_id=user, provenance="classified", score=margin)
            auto_accepted += 1
    report = CensusBuildReport(
        seeds_found=len(seeds),
        seeds_accepted=sum(1 for e in entries.values() if e.provenance == "seed_geo"),
        manual_candidates=len(manual_slice),
        manual_accepted=manual_accepted,
        classifier_cv_accuracy=cv_report.accuracy,
        auto_candidates=len(auto_slice),
        auto_accepted=auto_accepted,
    )
    return entries, report


def save_census(entries: dict[str, CensusEntry], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for user in sorted(entries):
            e = entries[user]
            fh.write(f"{e.user_id}\t{e.provenance}\t{e.score:.6f}\n")


def load_census(path: str | Path) -> dict[str, CensusEntry]:
    entries: dict[str, CensusEntry] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            user_id, provenance, score = line.split("\t")
            entries[user_id] = CensusEntry(user_id, provenance, float(score))
    return entries


def load_manual_labels(path: str | Path) -> dict[str, bool]:
    labels: dict[str, bool] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            user_id, value = line.split("\t")
            labels[user_id] = value.strip() in ("1", "true", "yes")
    return labels


# ---------------------------------------------------------------------------
# Weighted geocoding

@dataclass(frozen=True)
class GeoAnswer:
    lat: float
    lon: float
    region: str
    country: str
    confidence: float = 1.0


class GeocodeProvider(Protocol):
    name: str

    def geocode(self, query: str) -> GeoAnswer | None: ...


@dataclass
class FixtureProvider:
    """Deterministic provider for tests and offline runs."""

    name: str
    answers: dict[str, GeoAnswer]
    fail_on: frozenset[str] = frozenset()

    def geocode(self, query: str) -> GeoAnswer | None:
        if query in self.fail_on:
            raise TimeoutError(f"{self.name}: simulated timeout for {query!r}")
        return self.answers.get(query)


@dataclass
class GeoResolution:
    query: str
    provider_answers: dict[str, GeoAnswer | None]
    weights: dict[str, float]
    decision: str  # region name | "fictitious" | "unresolved"
    region: str | None = None


class GeoResolver:
    """Weighted majority vote across providers, with a persistent cache."""

    def __init__(
        self,
        providers: list[GeocodeProvider],
        weights: list[float] | None = None,
        threshold: float = 0.5,
        fictitious_confidence: float = 0.8,
    ):
        if not providers:
            raise ValueError("at least one provider required")
        raw = weights if weights is not None else [1.0] * len(providers)
        if len(raw) != len(providers) or any(w < 0 for w in raw):
            raise ValueError("weights must be >= 0, one per provider")
        total = sum(raw)
        if total <= 0:
            raise ValueError("weights must not all be zero")
        self.providers = providers
        self.weights = {p.name: w / total for p, w in zip(providers, raw)}
        self.threshold = threshold
        self.fictitious_confidence = fictitious_confidence
        self._cache: dict[str, GeoResolution] = {}

    def resolve(self, query: str) -> GeoResolution:
        cached = self._cache.get(query)
        if cached is not None:
            return cached
        answers: dict[str, GeoAnswer | None] = {}
        for provider in self.providers:
            try:
                answers[provider.name] = provider.geocode(query)
            except Exception:
                answers[provider.name] = None

        responding = {name: a for name, a in answers.items() if a is not None}
        resolution = GeoResolution(
            query=query, provider_answers=answers, weights=dict(self.weights),
            decision="unresolved",
        )
        if responding:
            # Confidently conflicting countries point at a fictitious place.
            confident_countries = {
                a.country for a in responding.values()
                if a.confidence >= self.fictitious_confidence
            }
            if len(confident_countries) > 1:
                resolution.decision = "fictitious"
            else:
                # Renormalize weight over the providers that answered.
                total = sum(self.weights[name] for name in responding)
                votes: dict[str, float] = {}
                for name, answer in responding.items():
                    votes[answer.region] = votes.get(answer.region, 0.0) + self.weights[name] / total
                region, share = max(votes.items(), key=lambda kv: (kv[1], kv[0]))
                if share > self.threshold:
                    resolution.decision = region
                    resolution.region = region
        self._cache[query] = resolution
        return resolution
