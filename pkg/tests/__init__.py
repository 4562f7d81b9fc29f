# jacq tests
