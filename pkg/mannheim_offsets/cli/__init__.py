"""コマンドラインインターフェース: 曲面カタログ、式の文法、表と OBJ の出力"""
