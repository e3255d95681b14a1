"""Run ``python -m koszulx``, the same as the ``kv`` command."""

from koszulx.cli import main

raise SystemExit(main())
