from valuta.cli import main

main()
