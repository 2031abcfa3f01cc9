import pytest

from matchlat import (
    TruncatedParallelogramSpec,
    load_graph,
    parallelogram_spec,
    prolate_triangle_spec,
    truncated_parallelogram,
)


def c6_description(outer_face=1):
    """Hand-built hexagon: vertices 0..5 clockwise, alternating colors.

    Face 0 is the walk 0->1->2->3->4->5; with outer_face=1 that walk is
    the clockwise inner face.
    """
    desc = {
        "vertices": [
            {"id": v, "color": "white" if v % 2 == 0 else "black"}
            for v in range(6)
        ],
        "edges": [[0, 1], [0, 5], [1, 2], [2, 3], [3, 4], [4, 5]],
        "rotation": {
            "0": [0, 1],
            "1": [0, 2],
            "2": [2, 3],
            "3": [3, 4],
            "4": [4, 5],
            "5": [5, 1],
        },
    }
    if outer_face is not None:
        desc["outer_face"] = outer_face
    return desc


def ladder_description():
    """Two squares sharing an edge, drawn on a 2x3 grid of vertices."""
    return {
        "vertices": [
            {"id": 0, "color": "white"},
            {"id": 1, "color": "black"},
            {"id": 2, "color": "white"},
            {"id": 3, "color": "black"},
            {"id": 4, "color": "white"},
            {"id": 5, "color": "black"},
        ],
        "edges": [[0, 1], [0, 3], [1, 2], [1, 4], [2, 5], [3, 4], [4, 5]],
        "rotation": {
            "0": [1, 0],
            "1": [0, 3, 2],
            "2": [2, 4],
            "3": [5, 1],
            "4": [5, 6, 3],
            "5": [6, 4],
        },
    }


def pendant_description():
    """Hexagon with a pendant path hanging inside: not weakly elementary.

    The single inner face is a 10-walk (not a simple cycle), so the two
    matchings cannot be connected by face flips.
    """
    return {
        "vertices": [
            {"id": 0, "color": "white"},
            {"id": 1, "color": "black"},
            {"id": 2, "color": "white"},
            {"id": 3, "color": "black"},
            {"id": 4, "color": "white"},
            {"id": 5, "color": "black"},
            {"id": 6, "color": "black"},
            {"id": 7, "color": "white"},
        ],
        "edges": [
            [0, 1], [0, 5], [0, 6], [1, 2], [2, 3], [3, 4], [4, 5], [6, 7]
        ],
        "rotation": {
            "0": [0, 2, 1],
            "1": [0, 3],
            "2": [3, 4],
            "3": [5, 4],
            "4": [6, 5],
            "5": [1, 6],
            "6": [2, 7],
            "7": [7],
        },
        "outer_face": 1,
    }


@pytest.fixture
def c6():
    return load_graph(c6_description())


@pytest.fixture
def ladder():
    return load_graph(ladder_description())


@pytest.fixture
def pendant():
    return load_graph(pendant_description())


@pytest.fixture
def hexagon_gen():
    return truncated_parallelogram(TruncatedParallelogramSpec((1,)))


@pytest.fixture
def naphthalene():
    # two stacked hexagons, the 2-rows-of-1 profile
    return truncated_parallelogram(parallelogram_spec(2, 1))


@pytest.fixture
def pyrene():
    return truncated_parallelogram(parallelogram_spec(2, 2))


@pytest.fixture
def t2():
    return truncated_parallelogram(prolate_triangle_spec(2))
