#!/usr/bin/env python3

import kerdocklab.algebra
import kerdocklab.analysis
import kerdocklab.codes
import kerdocklab.util
import kerdocklab.verify
from kerdocklab.codes import Code, WeightDistribution
from kerdocklab.errors import KerdockLabError
from kerdocklab.util.metadata import get_version as _get_version

version = _get_version()
