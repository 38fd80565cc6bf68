import json

import numpy as np
import pytest

from drumspec.spectrum import Spectrum, build_spectrum, tag_degeneracies


def test_tag_degeneracies_groups_close_values():
    tags = tag_degeneracies([1.0, 2.0, 2.0 + 1e-9, 5.0])
    assert list(tags) == [1, 2, 2, 1]
    tags = tag_degeneracies([1.0, 1.1, 1.2])
    assert list(tags) == [1, 1, 1]


def test_build_spectrum_sorts_and_labels():
    spec = build_spectrum([3.0, 1.0, 2.0], "m", n=4, labels=["c", "a", "b"])
    assert list(spec.eigenvalues) == [1.0, 2.0, 3.0]
    assert spec.labels == ["a", "b", "c"]
    assert [lv.index for lv in spec] == [0, 1, 2]


def test_csv_round_trip_and_determinism():
    spec = build_spectrum([1.0, np.pi], "m", n=8, labels=["g", "e"])
    text1 = spec.to_csv()
    text2 = spec.to_csv()
    assert text1 == text2
    header = text1.splitlines()[0].split(",")
    assert header == ["level_index", "label", "eigenvalue", "degeneracy",
                      "method", "N", "N_int"]
    assert "3.1415926535897931" in text1


def test_json_payload():
    spec = build_spectrum([2.0], "pt", n=3, n_int=7)
    payload = json.loads(spec.to_json())
    assert payload["method"] == "pt"
    assert payload["N_int"] == 7
    assert payload["levels"][0]["eigenvalue"] == 2.0


def test_rescale_validation():
    spec = build_spectrum([1.0], "m")
    with pytest.raises(ValueError):
        spec.rescaled(0.0)
