"""Size caps. All of them can be overridden from the command line."""

MAX_DEGREE = 16
MAX_TORIC_VERTICES = 8
MAX_TORIC_CLASS = 200_000
MAX_SN_IDENTITY = 7
MAX_DISCONNECTED = 9
MAX_GROUP_RING = 7
MAX_REPRESENTATIVE_SEARCH = 10


def check_cap(value, cap, what):
    from .errors import CapExceeded

    if value > cap:
        raise CapExceeded(f"{what} = {value} exceeds the configured cap {cap}")
