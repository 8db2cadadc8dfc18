from combx.cli import main

raise SystemExit(main())
