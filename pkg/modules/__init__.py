# Инициализация модульной структуры
