namespace rzt {}
