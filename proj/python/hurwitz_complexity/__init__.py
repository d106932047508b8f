try:
    from ._hurwitz import *  # noqa: F401,F403
except ImportError:  # in-tree builds keep the extension next to the build dir
    from _hurwitz import *  # noqa: F401,F403
