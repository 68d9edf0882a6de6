import math
from pathlib import Path

import pytest

from comaxdim.graph import Graph
from comaxdim.ring import RingSpec, parse_ring_spec


def spec(*lengths) -> RingSpec:
    return RingSpec.from_lengths(lengths)


def chain_specs_up_to(max_vertices: int) -> list[RingSpec]:
    """Every product of >= 2 chain rings (up to factor order) with |V| <= max_vertices."""
    out = []

    def vcount(ls):
        return math.prod(k + 1 for k in ls) - math.prod(ls) - 1

    def extend(prefix):
        if len(prefix) >= 2:
            if vcount(prefix) > max_vertices:
                return
            out.append(RingSpec.from_lengths(prefix))
        # adding a factor never shrinks |V|; lengths are non-increasing
        top = prefix[-1] if prefix else max_vertices
        for k in range(1, top + 1):
            cand = prefix + (k,)
            if len(cand) >= 2 and vcount(cand) > max_vertices:
                break
            extend(cand)

    extend(())
    return sorted(out, key=lambda s: (s.vertex_count(), len(s), s.chain))


def small_named_graphs() -> dict[str, Graph]:
    graphs = {}
    for n in range(2, 9):
        graphs[f"P{n}"] = Graph.path(n)
    for n in range(3, 9):
        graphs[f"C{n}"] = Graph.cycle(n)
    for parts in [(1, 1), (2, 2), (1, 3), (2, 3), (3, 3), (1, 1, 1, 1), (2, 2, 2), (1, 2, 3), (3, 4)]:
        graphs["K" + ",".join(map(str, parts))] = Graph.complete_multipartite(*parts)
    for n in (1, 4, 6):
        graphs[f"K{n}"] = Graph.complete(n)
    return graphs


@pytest.fixture
def z2_cubed():
    return spec(1, 1, 1)


@pytest.fixture
def z4z4z8():
    return spec(2, 2, 3)


CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


def corpus_specs():
    """Every ring listed in the shipped corpus files, in file order."""
    out = []
    for path in sorted(CORPUS_DIR.glob("*.txt")):
        for line in path.read_text(encoding="utf-8").splitlines():
            text = line.split("#", 1)[0].strip()
            if text:
                out.append(parse_ring_spec(text))
    return out


# criterion -> list of (part, ok, detail); filled by test_acceptance, printed at the end
ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[crit]
        failed = [f"{name} ({detail})" if detail else name for name, ok, detail in parts if not ok]
        status = "PASS" if not failed else "FAIL"
        line = f"criterion {crit}: {status}  [{len(parts) - len(failed)}/{len(parts)} parts]"
        if failed:
            line += "  failing: " + "; ".join(failed)
        terminalreporter.write_line(line)
