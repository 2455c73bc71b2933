import functools
import queue
import threading


class EndOfQueue(object):
    pass


def thread_counter(finalize):
    """Modifies a thread target function, such that the number of active
    threads is counted. If the count reaches zero, a finalizer is called."""
    n_threads = 0
    lock = threading.Lock()

    def target_modifier(target):
        @functools.wraps(target)
        def modified_target(*args, **kwargs):
            nonlocal n_threads, lock

            with lock:
                n_threads += 1

            try:
                return target(*args, **kwargs)

            finally:
                with lock:
                    n_threads -= 1
                    if n_threads == 0:
                        finalize()

        return modified_target

    return target_modifier


def parallel_map(function, items, n_threads=1):
    """Apply `function` to every item, using `n_threads` worker threads.

    Jobs are put on a queue together with their index; every worker pulls
    from that queue until it meets the end-of-queue marker. The results are
    sorted back into input order, so the outcome does not depend on thread
    scheduling. Exceptions raised by `function` are re-raised in the calling
    thread, the one belonging to the lowest index first.

    :param function: a function of one argument. It should not share
        mutable state with other calls.
    :param items: iterable of arguments.
    :param n_threads: number of worker threads; with 1 (or fewer items than
        two) everything runs in the calling thread.
    :rtype: list
    """
    items = list(items)
    if n_threads <= 1 or len(items) < 2:
        return [function(item) for item in items]

    jobs = queue.Queue()
    results = {}
    errors = {}
    done = threading.Event()

    for job in enumerate(items):
        jobs.put(job)
    jobs.put(EndOfQueue)

    def worker():
        while True:
            job = jobs.get()
            if job is EndOfQueue:
                jobs.put(EndOfQueue)
                return

            index, item = job
            try:
                results[index] = function(item)
            except Exception as exc:
                errors[index] = exc

    count = thread_counter(done.set)
    threads = [threading.Thread(target=count(worker), daemon=True)
               for _ in range(min(n_threads, len(items)))]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    done.wait()

    if errors:
        raise errors[min(errors)]

    return [results[i] for i in range(len(items))]
