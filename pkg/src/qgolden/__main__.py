from qgolden.cli import main

raise SystemExit(main())
