"""Random walks on Fuchsian groups: drift, entropy and dimension bounds."""

try:
    from driftlab._core import *  # noqa: F401,F403
    from driftlab._core import __version__, build_id  # noqa: F401
except ImportError:  # running against a build tree where _core is top-level
    from _core import *  # noqa: F401,F403
    from _core import __version__, build_id  # noqa: F401
