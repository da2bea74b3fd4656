# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

project = "pypolyzeta"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.mathjax",
]

# Words, bases and series read best in definition order
autodoc_member_order = "bysource"
autodoc_default_options = {
    "members": True,
    "undoc-members": True,
    "show-inheritance": True,
    "exclude-members": "__weakref__",
}
autodoc_typehints = "description"

exclude_patterns = [
    "build",
]

html_theme = "sphinx_rtd_theme"
html_title = "pypolyzeta: exact MZV relations"
