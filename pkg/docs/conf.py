import sys
from pathlib import Path


ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

try:
    import tomllib
except ImportError:
    import tomli as tomllib

with (ROOT / "pyproject.toml").open("rb") as handle:
    release = version = tomllib.load(handle)["project"]["version"]

project = "rotcocycle"
author = "rotcocycle contributors"
copyright = f"2026, {author}"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.intersphinx",
    "sphinx.ext.doctest",
    "sphinx_copybutton",
]
exclude_patterns = ["_build"]

html_theme = "furo"
html_title = "rotcocycle"

autodoc_default_options = {"members": True, "show-inheritance": True}
autodoc_typehints = "description"
autodoc_member_order = "bysource"
# tqdm is the optional progress extra
autodoc_mock_imports = ["tqdm"]

napoleon_numpy_docstring = False

doctest_global_setup = "import rotcocycle\nctx = rotcocycle.context(2)"

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "mpmath": ("https://mpmath.org/doc/current/", None),
}
