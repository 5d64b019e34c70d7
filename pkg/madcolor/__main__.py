from madcolor.cli import main

raise SystemExit(main())
