import pytest

from lib.data_types import InvalidParameter
from utils.workers import run_batch


def test_results_follow_input_order():
    assert run_batch(lambda x: x * x, list(range(20)), threads=3) == [x * x for x in range(20)]


def test_empty_batch():
    assert run_batch(str, [], threads=1) == []


def fail_on_odd(x):
    if x % 2:
        raise KeyError(x)
    return x


def test_first_error_by_position_is_raised():
    with pytest.raises(KeyError) as e:
        run_batch(fail_on_odd, [0, 2, 5, 3, 7], threads=4)
    assert e.value.args == (5,)


@pytest.mark.parametrize("threads", [0, -1])
def test_worker_count_must_be_positive(threads):
    with pytest.raises(InvalidParameter) as e:
        run_batch(str, [1], threads=threads)
    assert e.value.message == {"error": "InvalidParameter", "parameter": "threads", "value": threads, "minimum": 1}
