import pytest

from volmatroid.faces import (
    face,
    face_label,
    ground_set,
    num_edges,
    num_faces,
    parse_face,
)


def test_ground_set_n2_matches_known_order():
    gs = ground_set(2)
    assert gs.faces == ((1, 2), (1, 3), (2, 3), (1, 2, 3))
    assert gs.num_faces == 4
    assert gs.num_edges == 3


def test_ground_set_n3_counts():
    gs = ground_set(3)
    assert gs.num_faces == 11
    assert gs.num_edges == 6
    assert gs.faces[:6] == (
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
    # all edges precede all larger faces
    sizes = [len(f) for f in gs.faces]
    assert sizes == sorted(sizes)


def test_ground_set_n4_counts():
    gs = ground_set(4)
    assert gs.num_faces == 26  # 2^5 - 5 - 1
    assert gs.num_edges == 10


def test_counts_formulae():
    for n in range(2, 7):
        gs = ground_set(n)
        assert gs.num_faces == num_faces(n)
        assert gs.num_edges == num_edges(n)


def test_rejects_small_n():
    with pytest.raises(ValueError):
        ground_set(1)


def test_face_validation():
    assert face([3, 1]) == (1, 3)
    with pytest.raises(ValueError):
        face([2])
    with pytest.raises(ValueError):
        face([1, 1, 2])
    with pytest.raises(ValueError):
        face([0, 1])


def test_labels_round_trip():
    gs = ground_set(4)
    for f in gs.faces:
        assert parse_face(face_label(f)) == f
    assert face_label((1, 2, 3, 4)) == "1234"


def test_ordering_is_stable():
    # byte-identical serialization across independent constructions
    a = ",".join(ground_set(4).labels())
    from volmatroid.faces import GroundSet
    b = ",".join(GroundSet(4).labels())
    assert a == b
    assert a.startswith("12,13,14,15,23,24,25,34,35,45,123")
