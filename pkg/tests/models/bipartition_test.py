import pytest
from pydantic import ValidationError

from mrank.models.bipartition import Bipartition


def test_label_and_level():
    bipartition = Bipartition(subset=(1, 3), complement=(2, 4), d_subset=4, d_complement=4)
    assert bipartition.label == "I=[1,3]"
    assert bipartition.ell == 2
    assert bipartition.n == 4
    assert bipartition.is_balanced()


def test_not_a_partition():
    with pytest.raises(ValidationError):
        Bipartition(subset=(1,), complement=(3,), d_subset=2, d_complement=2)


def test_subset_too_large():
    with pytest.raises(ValidationError):
        Bipartition(subset=(1, 2), complement=(3,), d_subset=4, d_complement=2)


def test_not_increasing():
    with pytest.raises(ValidationError):
        Bipartition(subset=(1,), complement=(3, 2), d_subset=2, d_complement=4)
