import threading
import time

from pytest import raises

from roadgen.lib import (parallel_map, thread_counter)


def test_order_preserved():
    def slow_square(x):
        time.sleep(0.001 * (10 - x))
        return x * x

    assert parallel_map(slow_square, range(10), 4) == \
        [i**2 for i in range(10)]


def test_single_thread():
    calls = []

    def record(x):
        calls.append(threading.current_thread())
        return -x

    assert parallel_map(record, [1, 2, 3]) == [-1, -2, -3]
    assert all(t is threading.current_thread() for t in calls)
    assert parallel_map(record, [], 8) == []


def test_lowest_error_first():
    def check(x):
        if x % 3 == 2:
            raise ValueError(x)
        return x

    with raises(ValueError) as info:
        parallel_map(check, range(12), 3)
    assert info.value.args == (2,)


def test_thread_counter():
    finished = []
    count = thread_counter(lambda: finished.append(True))
    release = threading.Event()

    @count
    def wait():
        release.wait()

    threads = [threading.Thread(target=wait) for _ in range(3)]
    for t in threads:
        t.start()
    assert finished == []
    release.set()
    for t in threads:
        t.join()
    assert finished
