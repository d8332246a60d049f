from fspace.cli import main

raise SystemExit(main())
