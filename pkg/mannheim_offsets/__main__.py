from mannheim_offsets.cli.main import main

raise SystemExit(main())
