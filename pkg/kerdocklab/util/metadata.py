#!/usr/bin/env python3

""" Version and provenance information attached to reports. """

# std
import collections
from collections.abc import Iterable, Mapping
import pathlib
import time
from typing import Dict

# 3rd party
try:
    import git
except ImportError:
    git = None


def nested_dict():
    """ Dictionary-like object which automatically adds levels, e.g.

    .. code-block:: python

        a = nested_dict()
        a['harness']['scope']['kerdock'] = [4, 6]
    """
    return collections.defaultdict(nested_dict)


def version_info(log=None, path=None) -> Dict[str, str]:
    """ Package version together with the state of the git repository. """
    vinfo = {}
    vinfo.update(get_git_info(log=log, path=path))
    vinfo["version"] = get_version()
    return vinfo


def get_git_info(log=None, path=None) -> Dict[str, str]:
    """ Return dictionary containing status of the git repository (commit
    hash, branch, message and commit time).

    Args:
        log: logging.Logger object (optional)
        path: path to .git subfolder or search path (optional)

    Returns:
        dictionary, filled with ``"unknown"`` where nothing could be found
    """
    git_config = {
        "branch": "unknown",
        "sha": "unknown",
        "msg": "unknown",
        "time": "unknown",
    }

    if git is None:
        if log:
            log.debug(
                "Module 'git' not found, no git version information will be "
                "added to reports."
            )
        return git_config

    if not path:
        path = pathlib.Path(__file__)
    try:
        repo = git.Repo(path=path, search_parent_directories=True)
    except (git.InvalidGitRepositoryError, git.NoSuchPathError):
        return git_config

    try:
        git_config["branch"] = repo.head.name
        hcommit = repo.head.commit
    except ValueError:
        # repository without any commit
        return git_config
    git_config["sha"] = hcommit.hexsha
    git_config["msg"] = hcommit.message.strip("\n")
    git_config["time"] = time.strftime(
        "%a %d %b %Y %H:%M", time.gmtime(hcommit.committed_date)
    )
    return git_config


def failsafe_serialize(obj):
    """ Turn ``obj`` into something ``json.dumps`` accepts. Mappings keep
    their structure (keys become strings), other iterables become lists,
    numbers are kept and everything else is converted with ``str``. """
    if isinstance(obj, Mapping):
        return {str(key): failsafe_serialize(v) for key, v in obj.items()}
    elif isinstance(obj, (bool, type(None))):
        return obj
    elif hasattr(obj, "item") and not isinstance(obj, Iterable):
        # numpy scalars
        return failsafe_serialize(obj.item())
    elif isinstance(obj, Iterable) and not isinstance(obj, (str, bytes)):
        return [failsafe_serialize(v) for v in obj]
    elif isinstance(obj, (int, float)):
        return obj
    else:
        return str(obj)


def get_version() -> str:
    """ Return kerdocklab version. """
    version_path = pathlib.Path(__file__).parent.parent / "version.txt"
    with version_path.open("r") as version_file:
        version = version_file.read().strip()
    return version
