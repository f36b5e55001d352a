"""Generational search over acyclic orientations.

One master RNG stream drives every evolutionary decision (selection draws,
branch choices, cut points) in a fixed order on the control thread, and
fitness evaluation is a pure function of the candidate, so results are
bit-identical whether candidates are evaluated serially or by a thread
pool.
"""

from __future__ import annotations

import random
import time
from bisect import bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from math import ceil, floor
from typing import Callable, Iterable, Sequence

from .fitness_flow import FitnessEvaluator
from .graph import Graph
from .orientation import (
    LinearRepresentation,
    crossover,
    mutate,
    random_representation,
)


@dataclass(frozen=True)
class GAConfig:
    """Search parameters. ``generations`` and ``population_size`` default to
    10n and ceil(1.5n) for the graph at hand when left as None."""

    generations: int | None = None
    population_size: int | None = None
    elite_fraction: float = 0.05
    crossover_probability: float = 0.2
    normalization_factor: float = 15.0
    rng_seed: int = 1
    runs: int = 20
    target: int | None = None

    def __post_init__(self) -> None:
        if self.generations is not None and self.generations < 1:
            raise ValueError("generations must be >= 1")
        if self.population_size is not None and self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if not (0.0 <= self.elite_fraction < 1.0):
            raise ValueError("elite_fraction must lie in [0, 1)")
        if not (0.0 <= self.crossover_probability <= 1.0):
            raise ValueError("crossover_probability must lie in [0, 1]")
        if self.normalization_factor <= 1.0:
            raise ValueError("normalization_factor must exceed 1")
        if self.runs < 1:
            raise ValueError("runs must be >= 1")

    def resolved_generations(self, node_count: int) -> int:
        return self.generations if self.generations is not None else 10 * node_count

    def resolved_population_size(self, node_count: int) -> int:
        if self.population_size is not None:
            return self.population_size
        return max(2, ceil(1.5 * node_count))


@dataclass(frozen=True)
class Individual:
    representation: LinearRepresentation
    fitness: int
    insertion_index: int


@dataclass(frozen=True)
class Population:
    """Fixed-size collection kept sorted best-first.

    Ties in fitness rank the earlier-inserted individual as fitter.
    """

    members: tuple[Individual, ...]
    generation_number: int

    @classmethod
    def ranked(cls, individuals: Iterable[Individual], generation_number: int):
        members = tuple(
            sorted(individuals, key=lambda ind: (-ind.fitness, ind.insertion_index))
        )
        return cls(members, generation_number)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def best(self) -> Individual:
        return self.members[0]


def rank_weight(k: int, s: int, normalization_factor: float) -> float:
    """Selection weight of the k-th fittest of s: a linear ramp from
    ``normalization_factor`` at rank 1 down to 1 at rank s."""
    if s < 2:
        raise ValueError("rank_weight needs a population of at least 2")
    if not (1 <= k <= s):
        raise ValueError(f"rank {k} outside [1, {s}]")
    weight = normalization_factor - ((normalization_factor - 1.0) / (s - 1.0)) * (k - 1)
    return weight


class RankSelector:
    """Draws ranks with probability proportional to their rank weight."""

    def __init__(self, size: int, normalization_factor: float):
        self.size = size
        cumulative: list[float] = []
        total = 0.0
        for k in range(1, size + 1):
            total += rank_weight(k, size, normalization_factor) if size >= 2 else 1.0
            cumulative.append(total)
        self._cumulative = cumulative
        self._total = total

    def pick_index(self, rng: random.Random) -> int:
        return bisect_right(self._cumulative, rng.random() * self._total)


def select(pop: Population, normalization_factor: float, rng: random.Random) -> Individual:
    """Pick one individual by linearly normalized rank selection."""
    if not pop.members:
        raise ValueError("cannot select from an empty population")
    if len(pop) == 1:
        return pop.members[0]
    selector = RankSelector(len(pop), normalization_factor)
    return pop.members[selector.pick_index(rng)]


def elite_count(elite_fraction: float, population_size: int) -> int:
    """floor(f*s), but at least one elite whenever f > 0."""
    if elite_fraction <= 0.0:
        return 0
    return max(1, floor(elite_fraction * population_size))


def next_generation(
    pop: Population,
    cfg: GAConfig,
    fitness_fn: Callable[[Sequence[int]], int],
    rng: random.Random,
    mapper: Callable = map,
    selector: RankSelector | None = None,
) -> Population:
    """Produce the successor population: elites verbatim, then crossover
    pairs or mutants until full.

    Each slot-filling step draws the branch first, then parent(s), then the
    cut point. A crossover drawn with a single slot left is performed as a
    mutation instead, so the population never overshoots. Every new
    representation is evaluated exactly once, after all random draws for
    the generation are complete.
    """
    members = pop.members
    size = len(members)
    n = len(members[0].representation)
    elites = elite_count(cfg.elite_fraction, size)
    if selector is None:
        selector = RankSelector(size, cfg.normalization_factor)

    children: list[LinearRepresentation] = []
    wanted = size - elites
    while len(children) < wanted:
        remaining = wanted - len(children)
        cross = rng.random() < cfg.crossover_probability
        if cross and remaining >= 2 and n >= 2:
            parent1 = members[selector.pick_index(rng)]
            parent2 = members[selector.pick_index(rng)]
            z = rng.randint(1, n - 1)
            first, second = crossover(
                parent1.representation, parent2.representation, z
            )
            children.append(first)
            children.append(second)
        else:
            parent = members[selector.pick_index(rng)]
            z = rng.randint(1, n)
            children.append(mutate(parent.representation, z))

    scores = list(mapper(fitness_fn, [child.sequence for child in children]))
    individuals = [
        replace(ind, insertion_index=slot) for slot, ind in enumerate(members[:elites])
    ]
    individuals += [
        Individual(child, score, elites + slot)
        for slot, (child, score) in enumerate(zip(children, scores))
    ]
    return Population.ranked(individuals, pop.generation_number + 1)


@dataclass(frozen=True)
class RunResult:
    """Outcome of one independent search run."""

    best_set: frozenset[int]
    best_size: int
    best_fitness: int
    generation_found: int
    history: tuple[int, ...]
    seed: int
    evaluations: int
    elapsed_seconds: float = field(compare=False)


@dataclass(frozen=True)
class BatchResult:
    runs: tuple[RunResult, ...]
    best_size: int
    best_set: frozenset[int]
    best_run_index: int


def run(g: Graph, cfg: GAConfig, workers: int = 0) -> RunResult:
    """One full evolutionary run, deterministic given ``cfg.rng_seed``.

    The initial population of random permutations counts as generation 1;
    ``cfg.resolved_generations`` generations are produced in total, or
    fewer if ``cfg.target`` is set and the running best fitness reaches it.
    The reported set is the one extracted from the minimum cut of the
    best-fitness individual ever seen; it can be larger than that fitness,
    in which case the larger witnessed set is reported.
    """
    n = g.node_count
    if n < 1:
        raise ValueError("run needs a nonempty graph")
    started = time.perf_counter()
    total_generations = cfg.resolved_generations(n)
    size = cfg.resolved_population_size(n)
    rng = random.Random(cfg.rng_seed)
    evaluator = FitnessEvaluator(g)
    selector = RankSelector(size, cfg.normalization_factor)
    executor = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    mapper = executor.map if executor is not None else map
    try:
        representations = [random_representation(g, rng) for _ in range(size)]
        scores = list(
            mapper(evaluator.fitness_value, [r.sequence for r in representations])
        )
        pop = Population.ranked(
            (
                Individual(rep, score, slot)
                for slot, (rep, score) in enumerate(zip(representations, scores))
            ),
            generation_number=1,
        )
        evaluations = size
        best = pop.best
        generation_found = 1
        history = [best.fitness]
        while pop.generation_number < total_generations:
            if cfg.target is not None and history[-1] >= cfg.target:
                break
            pop = next_generation(
                pop, cfg, evaluator.fitness_value, rng, mapper, selector
            )
            evaluations += size - elite_count(cfg.elite_fraction, size)
            top = pop.best
            if top.fitness > best.fitness:
                best = top
                generation_found = pop.generation_number
            history.append(max(history[-1], top.fitness))
    finally:
        if executor is not None:
            executor.shutdown()
    outcome = evaluator.full_result(best.representation)
    if outcome.fitness != best.fitness:
        raise RuntimeError(
            f"cached fitness {best.fitness} disagrees with re-evaluation {outcome.fitness}"
        )
    return RunResult(
        best_set=outcome.independent_set,
        best_size=len(outcome.independent_set),
        best_fitness=best.fitness,
        generation_found=generation_found,
        history=tuple(history),
        seed=cfg.rng_seed,
        evaluations=evaluations,
        elapsed_seconds=time.perf_counter() - started,
    )


def best_of_runs(g: Graph, cfg: GAConfig, workers: int = 0) -> BatchResult:
    """``cfg.runs`` independent runs seeded seed, seed+1, ...; best kept.

    When ``cfg.target`` is set, no further runs are started once some run
    has reached it (its attainment already decides the aggregate), so a
    batch with a target records only the runs actually executed.
    """
    results: list[RunResult] = []
    for index in range(cfg.runs):
        outcome = run(g, replace(cfg, rng_seed=cfg.rng_seed + index), workers)
        results.append(outcome)
        if cfg.target is not None and outcome.best_size >= cfg.target:
            break
    best_index = max(range(len(results)), key=lambda i: results[i].best_size)
    winner = results[best_index]
    return BatchResult(
        runs=tuple(results),
        best_size=winner.best_size,
        best_set=winner.best_set,
        best_run_index=best_index,
    )
