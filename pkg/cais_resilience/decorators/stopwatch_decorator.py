from functools import wraps

from cais_resilience.core.stopwatch import Stopwatch


def stopwatch(func=None, *, logger=None):
    """
    Decorator that times the execution of a function using the Stopwatch class.

    Example usage:
        @stopwatch
        def run():
            ...

        # Or with logger
        @stopwatch(logger=my_logger)
        def run():
            ...
    """
    def decorator(f):
        @wraps(f)
        def wrapper(*args, **kwargs):
            sw = Stopwatch(f.__qualname__, logger=logger)
            try:
                return f(*args, **kwargs)
            finally:
                sw.stop()
        return wrapper

    if func is None:
        return decorator
    return decorator(func)
