import hypothesis as h

h.settings.register_profile('paleyclique', deadline=None, max_examples=60)
h.settings.load_profile('paleyclique')
