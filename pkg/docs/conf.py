"""Sphinx configuration file."""

import koszulx

project = "KoszulX"
copyright = "2026, KoszulX Authors"
author = "KoszulX Authors"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.coverage",
    "sphinx.ext.doctest",
    "sphinx.ext.githubpages",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
]

# Configure napoleon for numpy docstring
napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_use_param = False
napoleon_use_ivar = False
napoleon_use_rtype = False
napoleon_include_init_with_doc = False

templates_path = ["_templates"]

source_suffix = [".rst"]

master_doc = "index"

language = "en"

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

pygments_style = None

html_theme = "pydata_sphinx_theme"
htmlhelp_basename = "koszulxdoc"
html_last_updated_fmt = "%c"

latex_elements = {}

latex_documents = [
    (
        master_doc,
        "koszulx.tex",
        "KoszulX Documentation",
        author,
        "manual",
    ),
]

man_pages = [(master_doc, "koszulx", "KoszulX Documentation", [author], 1)]

texinfo_documents = [
    (
        master_doc,
        "koszulx",
        "KoszulX Documentation",
        author,
        "koszulx",
        "Koszul and vanishing syzygies of codimension two ideals.",
        "Miscellaneous",
    ),
]

epub_title = project
epub_exclude_files = ["search.html"]

release = koszulx.__version__
